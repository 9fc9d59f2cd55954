#include "hamtough/engine.hpp"

#include <algorithm>
#include <deque>

namespace hamtough {

namespace {

using Seq = std::vector<Vertex>;

void append(Seq& out, const Seq& part) { out.insert(out.end(), part.begin(), part.end()); }

VertexSet cycle_neighbors(const Graph& g, const OrientedCycle& c, VertexSet h) {
  return neighborhood(g, h) & c.vertices();
}

// Shortest path inside G[h] from `from` to `to`, neighbours taken in ascending order.
Seq path_within(const Graph& g, VertexSet h, Vertex from, Vertex to) {
  std::array<Vertex, kMaxVertices> parent{};
  parent.fill(-1);
  parent[from] = from;
  std::deque<Vertex> queue{from};
  while (!queue.empty() && parent[to] < 0) {
    const Vertex a = queue.front();
    queue.pop_front();
    for (Vertex b : g.neighbors(a) & h)
      if (parent[b] < 0) {
        parent[b] = a;
        queue.push_back(b);
      }
  }
  Seq path;
  for (Vertex v = to; v != from; v = parent[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

class MoveFinder {
 public:
  MoveFinder(const Graph& g, const OrientedCycle& c)
      : g_(g), c_(c), outside_(g.vertices() - c.vertices()) {}

  std::optional<Move> find() {
    if (outside_.empty()) return std::nullopt;
    if (auto m = absorb_component()) return m;
    for (MoveKind kind : {MoveKind::kM2, MoveKind::kM3})
      if (auto m = crossing(kind)) return m;
    if (auto m = two_externals()) return m;
    if (auto m = crossing(MoveKind::kM5)) return m;
    if (auto m = predecessor_chord()) return m;
    if (auto m = segment_transfer()) return m;
    return std::nullopt;
  }

 private:
  std::optional<Move> accept(MoveKind kind, Seq params, Seq result) const {
    if (static_cast<int>(result.size()) <= c_.length() || !is_cycle(g_, result)) return std::nullopt;
    return Move{kind, std::move(params), std::move(result)};
  }

  Seq fwd(Vertex u, Vertex v) const { return c_.segment(u, v, Direction::kForward); }
  Seq bwd(Vertex u, Vertex v) const { return c_.segment(u, v, Direction::kBackward); }

  // M1: anchors u, v of an off-cycle component H with u+ ~ v+; route through H.
  std::optional<Move> absorb_component() const {
    for (VertexSet h : components(g_, c_.vertices())) {
      const auto anchors = cycle_neighbors(g_, c_, h).to_vector();
      for (std::size_t i = 0; i < anchors.size(); ++i)
        for (std::size_t j = i + 1; j < anchors.size(); ++j) {
          const Vertex u = anchors[i];
          const Vertex v = anchors[j];
          if (!g_.adjacent(c_.succ(u), c_.succ(v))) continue;
          const Vertex u_in = (g_.neighbors(u) & h).min();
          const Vertex v_in = (g_.neighbors(v) & h).min();
          const Seq through = path_within(g_, h, v_in, u_in);
          Seq cycle = bwd(u, c_.succ(v));
          append(cycle, fwd(c_.succ(u), v));
          append(cycle, through);
          Seq params{u, v};
          append(params, through);
          if (auto m = accept(MoveKind::kM1, std::move(params), std::move(cycle))) return m;
        }
    }
    return std::nullopt;
  }

  // M2, M3, M5 share one splice: consecutive a, b = a+ and anchors P, Q met
  // in that order walking clockwise from b, with a ~ P+ and b ~ Q+:
  //   a P+ ->C Q x P <-C b Q+ ->C a
  // M2/M3: a and b are interior segment vertices (M3 when Q is a's own anchor);
  // M5: b is itself an anchor.
  std::optional<Move> crossing(MoveKind kind) const {
    for (Vertex x : outside_) {
      const VertexSet anchor_set = g_.neighbors(x) & c_.vertices();
      if (anchor_set.size() < 2) continue;
      const auto anchors = anchor_set.to_vector();
      for (Vertex a : c_.vertices()) {
        const Vertex b = c_.succ(a);
        if (anchor_set.contains(a)) continue;
        const bool b_anchor = anchor_set.contains(b);
        if ((kind == MoveKind::kM5) != b_anchor) continue;
        Vertex own = a;
        while (!anchor_set.contains(own)) own = c_.pred(own);
        const int span = c_.distance(b, a);
        for (Vertex p : anchors) {
          if (!g_.adjacent(a, c_.succ(p))) continue;
          for (Vertex q : anchors) {
            if (q == p || !g_.adjacent(b, c_.succ(q))) continue;
            const int dp = c_.distance(b, p);
            const int dq = c_.distance(b, q);
            if (!(dp < dq && dq < span)) continue;
            if (kind == MoveKind::kM2 && q == own) continue;
            if (kind == MoveKind::kM3 && q != own) continue;
            Seq cycle = fwd(c_.succ(p), q);
            cycle.push_back(x);
            append(cycle, bwd(p, b));
            append(cycle, fwd(c_.succ(q), a));
            if (auto m = accept(kind, {x, a, b, p, q}, std::move(cycle))) return m;
          }
        }
      }
    }
    return std::nullopt;
  }

  // M4: a second off-cycle vertex y adjacent to P+ and Q+ for anchors P, Q of x.
  std::optional<Move> two_externals() const {
    for (Vertex x : outside_) {
      const auto anchors = (g_.neighbors(x) & c_.vertices()).to_vector();
      if (anchors.size() < 2) continue;
      for (Vertex y : outside_) {
        if (y == x) continue;
        for (std::size_t i = 0; i < anchors.size(); ++i)
          for (std::size_t j = i + 1; j < anchors.size(); ++j) {
            const Vertex p = anchors[i];
            const Vertex q = anchors[j];
            if (!g_.adjacent(y, c_.succ(p)) || !g_.adjacent(y, c_.succ(q))) continue;
            Seq cycle = bwd(p, c_.succ(q));
            cycle.push_back(y);
            append(cycle, fwd(c_.succ(p), q));
            cycle.push_back(x);
            if (auto m = accept(MoveKind::kM4, {x, y, p, q}, std::move(cycle))) return m;
          }
      }
    }
    return std::nullopt;
  }

  // M6: anchors A, B of x whose predecessors are adjacent.
  std::optional<Move> predecessor_chord() const {
    for (Vertex x : outside_) {
      const auto anchors = (g_.neighbors(x) & c_.vertices()).to_vector();
      for (std::size_t i = 0; i < anchors.size(); ++i)
        for (std::size_t j = i + 1; j < anchors.size(); ++j) {
          const Vertex a = anchors[i];
          const Vertex b = anchors[j];
          if (!g_.adjacent(c_.pred(a), c_.pred(b))) continue;
          Seq cycle = bwd(c_.pred(b), a);
          cycle.push_back(x);
          append(cycle, fwd(b, c_.pred(a)));
          if (auto m = accept(MoveKind::kM6, {x, a, b}, std::move(cycle))) return m;
        }
    }
    return std::nullopt;
  }

  // M7: anchor A and the segment of anchor B (ending at e, before the next
  // anchor B'), with A ~ B+ and e ~ A+; the segment moves next to A.
  std::optional<Move> segment_transfer() const {
    for (Vertex x : outside_) {
      const VertexSet anchor_set = g_.neighbors(x) & c_.vertices();
      if (anchor_set.size() < 2) continue;
      for (Vertex a : anchor_set)
        for (Vertex b : anchor_set) {
          if (b == a) continue;
          Vertex next = c_.succ(b);
          while (!anchor_set.contains(next)) next = c_.succ(next);
          if (next == a || next == c_.succ(b)) continue;
          const Vertex e = c_.pred(next);
          if (!g_.adjacent(a, c_.succ(b)) || !g_.adjacent(e, c_.succ(a))) continue;
          Seq cycle{a};
          append(cycle, fwd(c_.succ(b), e));
          append(cycle, fwd(c_.succ(a), b));
          cycle.push_back(x);
          append(cycle, fwd(next, c_.pred(a)));
          if (auto m = accept(MoveKind::kM7, {x, a, b, next}, std::move(cycle))) return m;
        }
    }
    return std::nullopt;
  }

  const Graph& g_;
  const OrientedCycle& c_;
  VertexSet outside_;
};

// -------------------------------------------------------------- certificates

std::optional<Certificate> tough_cut(const Graph& g, VertexSet s, Rational t) {
  const int comps = component_count(g, s);
  if (comps < 2) return std::nullopt;
  const Rational ratio(s.size(), comps);
  if (!(ratio < t)) return std::nullopt;
  return ToughCutCert{s, comps, ratio};
}

std::optional<Certificate> induced(const Graph& g, Edge e, VertexSet pool, int k) {
  const VertexSet ends{e.u, e.v};
  const VertexSet free_pool = pool - ends - neighborhood(g, ends);
  if (auto singles = find_independent_subset(g, free_pool, k))
    return InducedCert{FreenessWitness{Edge::canonical(e.u, e.v), *singles}, k};
  return std::nullopt;
}

// Edge-plus-independent-set witnesses at every point where the lengthening
// argument would otherwise need the graph to be (P2 ∪ kP1)-free.
std::optional<Certificate> structural_induced(const Graph& g, const OrientedCycle& c, int k) {
  const VertexSet outside = g.vertices() - c.vertices();

  for (VertexSet h : components(g, c.vertices())) {
    if (h.size() < 2) continue;
    const VertexSet pool = c.plus_set(cycle_neighbors(g, c, h));
    for (Vertex u : h)
      for (Vertex v : g.neighbors(u) & h)
        if (u < v)
          if (auto cert = induced(g, {u, v}, pool, k)) return cert;
  }

  for (Vertex x : outside) {
    const VertexSet anchor_set = g.neighbors(x) & c.vertices();
    if (anchor_set.empty()) continue;
    const SegmentPartition part = partition(g, c, x);
    const VertexSet plus = c.plus_set(anchor_set);
    const VertexSet plus_x = plus | VertexSet::single(x);

    for (Vertex a : part.anchors) {
      if (auto cert = induced(g, {a, c.succ(a)}, plus, k)) return cert;
      if (auto cert = induced(g, {x, a}, plus, k)) return cert;
    }
    for (const auto& seg : part.segments)
      for (std::size_t j = 0; j < seg.size(); ++j) {
        if (j + 1 < seg.size())
          if (auto cert = induced(g, {seg[j], seg[j + 1]}, plus_x, k)) return cert;
        for (Vertex z : g.neighbors(seg[j]) & plus)
          if (auto cert = induced(g, {seg[j], z}, plus_x, k)) return cert;
      }
    for (Vertex u : part.sprime)
      for (Vertex v : g.neighbors(u) & part.sprime)
        if (u < v)
          if (auto cert = induced(g, {u, v}, plus, k)) return cert;
    for (Vertex y : outside) {
      if (y == x) continue;
      for (Vertex z : g.neighbors(y) & (plus | part.sprime))
        if (auto cert = induced(g, {y, z}, plus, k)) return cert;
    }
    const VertexSet sprime_x = part.sprime | VertexSet::single(x);
    for (Vertex z : c.vertices() - anchor_set - part.sprime)
      if (auto cert = induced(g, {c.pred(z), z}, sprime_x, k)) return cert;
  }
  return std::nullopt;
}

std::optional<Certificate> structural(const Graph& g, const OrientedCycle& c, int k, Rational t,
                                      int required) {
  const VertexSet outside = g.vertices() - c.vertices();
  const auto off_cycle = components(g, c.vertices());

  for (Vertex x : outside) {
    if (!g.neighbors(x).intersects(c.vertices())) continue;
    const SegmentPartition part = partition(g, c, x);
    if (auto cert = tough_cut(g, c.vertices() - part.sprime, t)) return cert;
  }
  for (VertexSet h : off_cycle)
    if (auto cert = tough_cut(g, cycle_neighbors(g, c, h), t)) return cert;

  if (k >= 1)
    if (auto cert = structural_induced(g, c, k)) return cert;

  for (VertexSet h : off_cycle) {
    const VertexSet s = cycle_neighbors(g, c, h);
    if (s.size() < required && component_count(g, s) >= 2) return VertexCutCert{s, required};
  }
  return std::nullopt;
}

std::optional<Certificate> first_principles(const Graph& g, int k, Rational t, int required) {
  if (auto s = find_tough_violation(g, t)) return tough_cut(g, *s, t);
  if (k >= 1)
    if (auto w = find_induced_p2_kp1(g, k)) return InducedCert{*w, k};
  if (vertex_connectivity(g) < required)
    if (auto cut = min_vertex_cut(g)) return VertexCutCert{*cut, required};
  return std::nullopt;
}

}  // namespace

// --------------------------------------------------------------- partition

bool SegmentPartition::has_empty_segment() const {
  return std::any_of(segments.begin(), segments.end(), [](const auto& s) { return s.empty(); });
}

bool SegmentPartition::all_segments_odd() const {
  return std::all_of(segments.begin(), segments.end(), [](const auto& s) { return s.size() % 2 == 1; });
}

SegmentPartition partition(const Graph& g, const OrientedCycle& c, Vertex x) {
  if (c.contains(x)) throw CycleError("partition: x lies on the cycle");
  const VertexSet anchor_set = g.neighbors(x) & c.vertices();
  if (anchor_set.empty()) throw std::invalid_argument("partition: x has no neighbour on the cycle");

  SegmentPartition part;
  part.x = x;
  const Vertex first = anchor_set.min();
  for (int i = 0; i < c.length(); ++i) {
    const Vertex v = c.jump(first, i);
    if (anchor_set.contains(v)) {
      part.anchors.push_back(v);
      part.segments.emplace_back();
    } else {
      part.segments.back().push_back(v);
    }
  }
  for (const auto& seg : part.segments)
    for (std::size_t j = 0; j < seg.size(); j += 2) part.sprime.insert(seg[j]);
  return part;
}

// ------------------------------------------------------------------- moves

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::kM1: return "M1";
    case MoveKind::kM2: return "M2";
    case MoveKind::kM3: return "M3";
    case MoveKind::kM4: return "M4";
    case MoveKind::kM5: return "M5";
    case MoveKind::kM6: return "M6";
    case MoveKind::kM7: return "M7";
    case MoveKind::kFallback: return "FALLBACK";
  }
  return "?";
}

std::string_view rule_of(MoveKind kind) {
  switch (kind) {
    case MoveKind::kM1: return "u <-C v+ u+ ->C v v' P u' (u+ ~ v+, P inside an off-cycle component)";
    case MoveKind::kM2: return "a p+ ->C q x p <-C b q+ ->C a (b = a+, both interior)";
    case MoveKind::kM3: return "a q+ ->C xi x q <-C b xi+ ->C a (xi = anchor of a's segment)";
    case MoveKind::kM4: return "p <-C q+ y p+ ->C q x p (y off-cycle, y ~ p+, q+)";
    case MoveKind::kM5: return "e p+ ->C q x p <-C x' q+ ->C e (e = last of segment, x' next anchor)";
    case MoveKind::kM6: return "a- b- <-C a x b ->C a- (a-, b- adjacent)";
    case MoveKind::kM7: return "a b+ ->C e a+ ->C b x b' ->C a (segment of b moved after a)";
    case MoveKind::kFallback: return "exact search for a longer cycle";
  }
  return "";
}

std::optional<Move> find_move(const Graph& g, const OrientedCycle& c, int /*k*/) {
  return MoveFinder(g, c).find();
}

// ------------------------------------------------------------ certificates

std::string_view certificate_kind(const Certificate& cert) {
  struct Visitor {
    std::string_view operator()(const HamiltonianCert&) const { return "Hamiltonian"; }
    std::string_view operator()(const ToughCutCert&) const { return "ToughCut"; }
    std::string_view operator()(const VertexCutCert&) const { return "VertexCut"; }
    std::string_view operator()(const InducedCert&) const { return "Induced"; }
  };
  return std::visit(Visitor{}, cert);
}

std::string_view to_string(CertificateSource source) {
  switch (source) {
    case CertificateSource::kCycle: return "cycle";
    case CertificateSource::kStructural: return "structural";
    case CertificateSource::kSearch: return "search";
  }
  return "?";
}

std::optional<Certificate> extract_certificate(const Graph& g, const OrientedCycle& c, int k,
                                               Rational t, int required_connectivity,
                                               ExtractionMode mode) {
  if (auto cert = structural(g, c, k, t, required_connectivity)) return cert;
  if (mode == ExtractionMode::kExhaustive) return first_principles(g, k, t, required_connectivity);
  return std::nullopt;
}

bool validate(const Graph& g, const Certificate& cert, int k, Rational t, int required_connectivity) {
  const VertexSet all = g.vertices();
  if (const auto* ham = std::get_if<HamiltonianCert>(&cert)) return is_hamiltonian_cycle(g, ham->order);
  if (const auto* tc = std::get_if<ToughCutCert>(&cert)) {
    if (!tc->cut.subset_of(all) || t.is_infinite()) return false;
    const int comps = component_count(g, tc->cut);
    return comps >= 2 && comps == tc->components && tc->ratio == Rational(tc->cut.size(), comps) &&
           tc->ratio < t;
  }
  if (const auto* vc = std::get_if<VertexCutCert>(&cert)) {
    return vc->cut.subset_of(all) && vc->required == required_connectivity &&
           vc->cut.size() < required_connectivity && component_count(g, vc->cut) >= 2;
  }
  const auto& ind = std::get<InducedCert>(cert);
  return ind.k == k && ind.witness.valid_in(g, k);
}

// --------------------------------------------------------------------- run

std::string_view to_string(EngineMode mode) {
  return mode == EngineMode::kTheorem5 ? "theorem5" : "theorem6";
}

std::string_view to_string(SeedCycle seed) {
  return seed == SeedCycle::kShortest ? "shortest" : "longest";
}

int required_connectivity(EngineMode mode, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (mode == EngineMode::kTheorem6) {
    if (k < 3) throw std::invalid_argument("theorem6 mode needs k >= 3");
    return 2 * k - 2;
  }
  return 2 * k;
}

EngineTrace run(const Graph& g, int k, EngineMode mode, Rational t, const EngineOptions& options) {
  const int n = g.order();
  if (n < 3) throw std::invalid_argument("engine needs at least three vertices");
  if (!is_connected(g)) throw std::invalid_argument("engine needs a connected graph");
  if (t.is_infinite() || t.num() == 0) throw std::invalid_argument("t must be finite and positive");

  EngineTrace trace;
  trace.required_connectivity = options.required_connectivity.value_or(required_connectivity(mode, k));
  auto seed = options.seed == SeedCycle::kShortest ? shortest_cycle_seed(g) : longest_cycle(g);
  if (!seed) throw NoCycleError();
  trace.seed = *seed;

  OrientedCycle c(g, std::move(*seed));
  while (c.length() < n) {
    if (auto move = find_move(g, c, k)) {
      c = OrientedCycle(g, move->result);
      trace.steps.push_back(std::move(*move));
      continue;
    }
    if (auto cert = extract_certificate(g, c, k, t, trace.required_connectivity)) {
      trace.outcome = std::move(cert);
      trace.source = CertificateSource::kStructural;
      return trace;
    }
    if (auto longer = find_cycle_at_least(g, c.length() + 1)) {
      c = OrientedCycle(g, *longer);
      trace.steps.push_back(Move{MoveKind::kFallback, {}, std::move(*longer)});
      ++trace.fallback_count;
      continue;
    }
    // c is a longest cycle and not Hamiltonian.
    trace.outcome = first_principles(g, k, t, trace.required_connectivity);
    trace.source = CertificateSource::kSearch;
    if (!trace.outcome)
      trace.diagnostics = "longest cycle has " + std::to_string(c.length()) + " of " +
                          std::to_string(n) +
                          " vertices and no hypothesis violation exists: candidate counterexample";
    return trace;
  }
  trace.outcome = HamiltonianCert{c.sequence()};
  trace.source = CertificateSource::kCycle;
  return trace;
}

}  // namespace hamtough
