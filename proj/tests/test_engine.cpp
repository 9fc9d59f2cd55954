#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "hamtough/engine.hpp"
#include "hamtough/graph_io.hpp"
#include "hamtough/invariants.hpp"

using namespace hamtough;

namespace {

const std::vector<Vertex> kHex{0, 1, 2, 3, 4, 5};

template <class T>
const T& as(const Certificate& c) {
  REQUIRE(std::holds_alternative<T>(c));
  return std::get<T>(c);
}

}  // namespace

TEST_CASE("partition examples") {
  const Graph a = fixtures::c6_plus({0, 3});
  const auto pa = partition(a, OrientedCycle(a, kHex), 6);
  CHECK(pa.anchors == std::vector<Vertex>{0, 3});
  CHECK(pa.segments == std::vector<std::vector<Vertex>>{{1, 2}, {4, 5}});
  CHECK(pa.sprime == VertexSet{1, 4});
  CHECK_FALSE(pa.has_empty_segment());
  CHECK_FALSE(pa.all_segments_odd());

  const Graph b = fixtures::c6_plus({0, 2, 4});
  const auto pb = partition(b, OrientedCycle(b, kHex), 6);
  CHECK(pb.segments == std::vector<std::vector<Vertex>>{{1}, {3}, {5}});
  CHECK(pb.sprime == VertexSet{1, 3, 5});
  CHECK(pb.all_segments_odd());

  const Graph c = fixtures::c6_plus({0, 1});
  const auto pc = partition(c, OrientedCycle(c, kHex), 6);
  CHECK(pc.has_empty_segment());
  CHECK(pc.segments.front().empty());

  CHECK_THROWS_AS(partition(b, OrientedCycle(b, kHex), 0), CycleError);
  const Graph lone = Graph::from_edge_list(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  CHECK_THROWS_AS(partition(lone, OrientedCycle(lone, kHex), 6), std::invalid_argument);
}

TEST_CASE("partition identities on random cycles") {
  std::mt19937 rng(12);
  const Graph g = fixtures::random_graph(14, 0.45, rng);
  const auto seed = longest_cycle(g);
  REQUIRE(seed);
  const OrientedCycle c(g, *seed);
  for (Vertex x : c.vertices().complement_within(g.vertices())) {
    const VertexSet anchors = g.neighbors(x) & c.vertices();
    if (anchors.empty()) continue;
    const auto p = partition(g, c, x);
    CHECK(static_cast<int>(p.anchors.size()) == anchors.size());
    CHECK(p.anchors.front() == anchors.min());
    VertexSet covered = anchors;
    int total = static_cast<int>(p.anchors.size());
    for (std::size_t i = 0; i < p.segments.size(); ++i) {
      for (Vertex v : p.segments[i]) covered.insert(v);
      total += static_cast<int>(p.segments[i].size());
      if (!p.segments[i].empty()) CHECK(p.segments[i].front() == c.succ(p.anchors[i]));
    }
    CHECK(covered == c.vertices());
    CHECK(total == c.length());
    CHECK(p.sprime.subset_of(c.vertices() - anchors));
  }
}

TEST_CASE("find_move examples") {
  const Graph chord = Graph::from_edge_list(
      7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 6}, {3, 6}, {1, 4}});
  const auto m = find_move(chord, OrientedCycle(chord, kHex), 1);
  REQUIRE(m);
  CHECK(m->kind == MoveKind::kM1);
  CHECK(m->params == std::vector<Vertex>{0, 3, 6});
  CHECK(m->result == std::vector<Vertex>{0, 5, 4, 1, 2, 3, 6});
  CHECK(is_cycle(chord, m->result));

  const Graph lone = Graph::from_edge_list(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  CHECK_FALSE(find_move(lone, OrientedCycle(lone, kHex), 1));

  const Graph tri = fixtures::c6_plus({0, 2, 4});
  CHECK_FALSE(find_move(tri, OrientedCycle(tri, kHex), 1));

  const Graph k5 = fixtures::complete(5);
  const auto grow = find_move(k5, OrientedCycle(k5, {0, 1, 2, 3}), 1);
  REQUIRE(grow);
  CHECK(grow->result.size() == 5);
  CHECK(is_hamiltonian_cycle(k5, grow->result));
}

TEST_CASE("extract_certificate examples") {
  const Graph tri = fixtures::c6_plus({0, 2, 4});
  const auto cert = extract_certificate(tri, OrientedCycle(tri, kHex), 1, Rational(1), 2);
  REQUIRE(cert);
  const auto& tc = as<ToughCutCert>(*cert);
  CHECK(tc.cut == VertexSet{0, 2, 4});
  CHECK(tc.components == 4);
  CHECK(tc.ratio == Rational(3, 4));

  // Pendant edge 6-7 hanging off the hexagon through 6~0 and 7~3.
  const Graph pendant = Graph::from_edge_list(
      8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 6}, {6, 7}, {3, 7}});
  const auto pc = extract_certificate(pendant, OrientedCycle(pendant, kHex), 2, Rational(1, 2), 4);
  REQUIRE(pc);
  CHECK(validate(pendant, *pc, 2, Rational(1, 2), 4));
  CHECK(certificate_kind(*pc) == "Induced");
}

TEST_CASE("validate examples") {
  const Graph c5 = fixtures::cycle(5);
  CHECK(validate(c5, HamiltonianCert{{0, 1, 2, 3, 4}}, 1, Rational(1), 2));
  CHECK_FALSE(validate(c5, HamiltonianCert{{0, 1, 2, 3}}, 1, Rational(1), 2));
  CHECK_FALSE(validate(c5, ToughCutCert{{0}, 1, Rational(1)}, 1, Rational(2), 2));
  CHECK(validate(c5, ToughCutCert{{0, 2}, 2, Rational(1)}, 1, Rational(2), 2));
  CHECK_FALSE(validate(c5, InducedCert{{{0, 1}, {2}}, 1}, 1, Rational(1), 2));
  CHECK(validate(c5, InducedCert{{{0, 1}, {3}}, 1}, 1, Rational(1), 2));
  CHECK(validate(c5, VertexCutCert{{0, 2}, 3}, 1, Rational(1), 3));
  CHECK_FALSE(validate(c5, VertexCutCert{{0, 2}, 2}, 1, Rational(1), 2));
}

TEST_CASE("required_connectivity") {
  CHECK(required_connectivity(EngineMode::kTheorem5, 2) == 4);
  CHECK(required_connectivity(EngineMode::kTheorem6, 3) == 4);
  CHECK_THROWS(required_connectivity(EngineMode::kTheorem6, 2));
  CHECK_THROWS(required_connectivity(EngineMode::kTheorem5, 0));
}

TEST_CASE("run examples") {
  const auto k5 = run(fixtures::complete(5), 1, EngineMode::kTheorem5, Rational(1));
  REQUIRE(k5.outcome);
  CHECK(as<HamiltonianCert>(*k5.outcome).order.size() == 5);

  const auto tri = run(fixtures::c6_plus({0, 2, 4}), 1, EngineMode::kTheorem5, Rational(1));
  REQUIRE(tri.outcome);
  CHECK(as<ToughCutCert>(*tri.outcome).ratio == Rational(3, 4));

  for (SeedCycle seed : {SeedCycle::kShortest, SeedCycle::kLongest}) {
    const Graph p = fixtures::petersen();
    const auto pt = run(p, 3, EngineMode::kTheorem6, Rational(1), {seed, std::nullopt});
    REQUIRE(pt.outcome);
    const auto& vc = as<VertexCutCert>(*pt.outcome);
    CHECK(vc.cut.size() == 3);
    CHECK(vc.required == 4);
    CHECK(validate(p, *pt.outcome, 3, Rational(1), 4));
  }

  CHECK_THROWS_AS(run(Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}), 1,
                      EngineMode::kTheorem5, Rational(1)),
                  NoCycleError);
  CHECK_THROWS(run(fixtures::complete(2), 1, EngineMode::kTheorem5, Rational(1)));
  CHECK_THROWS(run(Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}), 1,
                   EngineMode::kTheorem5, Rational(1)));
}

TEST_CASE("engine is sound and every step strictly lengthens the cycle") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> density(0.25, 0.9);
  int checked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const Graph g = fixtures::random_graph(4 + trial % 8, density(rng), rng);
    if (!is_connected(g) || !shortest_cycle_seed(g)) continue;
    INFO(to_graph6(g));
    const int k = 1 + trial % 3;
    const EngineMode mode = k >= 3 && trial % 2 ? EngineMode::kTheorem6 : EngineMode::kTheorem5;
    for (SeedCycle seed : {SeedCycle::kShortest, SeedCycle::kLongest}) {
      const auto tr = run(g, k, mode, Rational(1), {seed, std::nullopt});
      REQUIRE(tr.outcome);
      CHECK(validate(g, *tr.outcome, k, Rational(1), tr.required_connectivity));
      std::size_t len = tr.seed.size();
      for (const auto& step : tr.steps) {
        CHECK(is_cycle(g, step.result));
        CHECK(step.result.size() > len);
        len = step.result.size();
      }
      ++checked;
    }
  }
  CHECK(checked > 500);
}
