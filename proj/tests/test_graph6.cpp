#include <doctest.h>

#include <random>
#include <string>

#include "fixtures.hpp"
#include "hamtough/graph_io.hpp"

using namespace hamtough;

namespace {

// Written from the format description, independent of the library encoder.
std::string encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  std::vector<int> bits;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) bits.push_back(g.adjacent(u, v) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int x = 0;
    for (int j = 0; j < 6; ++j) x = (x << 1) | bits[i + j];
    out.push_back(static_cast<char>(x + 63));
  }
  return out;
}

}  // namespace

TEST_CASE("graph6 decode examples") {
  const Graph star = parse_graph6("D?{");
  CHECK(star.order() == 5);
  CHECK(star.edges() == std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(encode(star) == "D?{");
  CHECK(to_graph6(star) == "D?{");

  const Graph one = parse_graph6("@");
  CHECK(one.order() == 1);
  CHECK(one.edge_count() == 0);

  CHECK(parse_graph6("C~") == fixtures::complete(4));
  CHECK(parse_graph6(">>graph6<<C~") == fixtures::complete(4));
  CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 encode examples") {
  CHECK(to_graph6(fixtures::complete(4)) == "C~");
  CHECK(to_graph6(Graph::from_edge_list(1, {})) == "@");
  CHECK(to_graph6(fixtures::petersen()) == encode(fixtures::petersen()));
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> order(0, 64);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = fixtures::random_graph(order(rng), density(rng), rng);
    const std::string s = to_graph6(g);
    REQUIRE(s == encode(g));
    CHECK(parse_graph6(s) == g);
  }
}

TEST_CASE("graph6 long header") {
  std::mt19937 rng(7);
  for (int n : {62, 63, 64}) {
    const Graph g = fixtures::random_graph(n, 0.5, rng);
    const std::string s = to_graph6(g);
    CHECK((s[0] == '~') == (n >= 63));
    CHECK(parse_graph6(s) == g);
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("D?"), ParseError);       // too short
  CHECK_THROWS_AS(parse_graph6("D?{?"), ParseError);     // trailing byte
  CHECK_THROWS_AS(parse_graph6("A "), ParseError);       // byte below 63
  CHECK_THROWS_AS(parse_graph6("A@"), ParseError);       // nonzero padding
  CHECK_THROWS_AS(parse_graph6("~?AA"), ParseError);     // n = 65 exceeds the limit
}

TEST_CASE("edge list text format") {
  const Graph g = parse_graph_text("4 3\n0 1\n1 2\n2 3\n");
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(parse_graph_text(to_edge_list(fixtures::petersen())) == fixtures::petersen());
  CHECK(parse_graph_text("C~\n") == fixtures::complete(4));
  CHECK_THROWS(parse_graph_text("3 2\n0 1\n"));
}

TEST_CASE("graph6 round trip on the bundled corpus") {
  const auto lines = fixtures::corpus_lines("graphs_n0-7.g6");
  REQUIRE(lines.size() == 1253);
  for (const auto& line : lines) CHECK(to_graph6(parse_graph6(line)) == line);
}
