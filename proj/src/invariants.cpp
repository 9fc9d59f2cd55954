#include "hamtough/invariants.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hamtough {

bool FreenessWitness::valid_in(const Graph& g, int k) const {
  const int n = g.order();
  if (edge.u < 0 || edge.v < 0 || edge.u >= n || edge.v >= n || edge.u == edge.v) return false;
  if (!g.adjacent(edge.u, edge.v)) return false;
  if (!singles.subset_of(g.vertices()) || singles.size() != k) return false;
  const VertexSet ends{edge.u, edge.v};
  if (singles.intersects(ends)) return false;
  if (singles.intersects(neighborhood(g, ends))) return false;
  return is_independent(g, singles);
}

// ---------------------------------------------------------------- toughness

namespace {

struct ToughnessBest {
  int size = 0;
  int comps = 0;  // 0 means "no cut seen yet"
  std::uint64_t mask = 0;

  // |S|/c strictly smaller, or equal with a lower mask.
  bool improves_on(const ToughnessBest& o) const {
    if (comps == 0) return false;
    if (o.comps == 0) return true;
    const long lhs = static_cast<long>(size) * o.comps;
    const long rhs = static_cast<long>(o.size) * comps;
    return lhs < rhs || (lhs == rhs && mask < o.mask);
  }
};

ToughnessBest scan_masks(const Graph& g, std::uint64_t first, std::uint64_t last) {
  const int n = g.order();
  ToughnessBest best;
  for (std::uint64_t m = first; m < last; ++m) {
    const VertexSet s(m);
    const int size = s.size();
    if (n - size < 2) continue;
    // c(G-S) <= n-|S|, so S cannot beat the incumbent if |S|/(n-|S|) is already worse.
    if (best.comps != 0 &&
        static_cast<long>(size) * best.comps > static_cast<long>(best.size) * (n - size))
      continue;
    const int comps = component_count(g, s);
    if (comps < 2) continue;
    const ToughnessBest cand{size, comps, m};
    if (cand.improves_on(best)) best = cand;
  }
  return best;
}

ToughnessResult to_result(const ToughnessBest& best) {
  if (best.comps == 0) return {Rational::infinite(), {}, 0};
  return {Rational(best.size, best.comps), VertexSet(best.mask), best.comps};
}

std::uint64_t mask_limit(const Graph& g) {
  if (g.order() >= 63) throw GraphError("exhaustive subset enumeration needs n < 63");
  return std::uint64_t{1} << g.order();
}

}  // namespace

ToughnessResult toughness_serial(const Graph& g) {
  return to_result(scan_masks(g, 0, mask_limit(g)));
}

ToughnessResult toughness_parallel(const Graph& g, int threads) {
  const std::uint64_t limit = mask_limit(g);
  constexpr std::uint64_t kChunk = 1 << 12;
  const auto chunks = static_cast<long>((limit + kChunk - 1) / kChunk);
  ToughnessBest best;
#ifdef _OPENMP
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(team)
#endif
  {
    ToughnessBest local;
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
    for (long c = 0; c < chunks; ++c) {
      const std::uint64_t first = static_cast<std::uint64_t>(c) * kChunk;
      const ToughnessBest part = scan_masks(g, first, std::min(limit, first + kChunk));
      if (part.improves_on(local)) local = part;
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    if (local.improves_on(best)) best = local;
  }
  (void)threads;
  return to_result(best);
}

ToughnessResult toughness_with_cut(const Graph& g) {
  if (g.order() >= kParallelToughnessThreshold) return toughness_parallel(g);
  return toughness_serial(g);
}

Rational toughness(const Graph& g) { return toughness_with_cut(g).value; }

std::optional<VertexSet> find_tough_violation(const Graph& g, Rational t) {
  if (t.is_infinite()) throw std::invalid_argument("toughness threshold must be finite");
  const int n = g.order();
  const std::uint64_t limit = mask_limit(g);
  for (std::uint64_t m = 0; m < limit; ++m) {
    const VertexSet s(m);
    const long size = s.size();
    if (n - size < 2) continue;
    // Violation needs |S| * den < num * c with c <= n - |S|.
    if (size * t.den() >= t.num() * (n - size)) continue;
    const long comps = component_count(g, s);
    if (comps >= 2 && size * t.den() < t.num() * comps) return s;
  }
  return std::nullopt;
}

bool is_t_tough(const Graph& g, Rational t) {
  if (t.is_infinite() || t.num() == 0) throw std::invalid_argument("t must be finite and positive");
  return !find_tough_violation(g, t).has_value();
}

// ------------------------------------------------------------- connectivity

namespace {

// Vertex-split unit-capacity network: in(v) = 2v, out(v) = 2v+1.
class SplitNetwork {
 public:
  SplitNetwork(const Graph& g, Vertex s, Vertex t) : size_(2 * g.order()), cap_(size_ * size_, 0) {
    constexpr int kInf = kMaxVertices + 1;
    for (Vertex v = 0; v < g.order(); ++v) {
      cap(in(v), out(v)) = (v == s || v == t) ? kInf : 1;
      for (Vertex w : g.neighbors(v)) cap(out(v), in(w)) = kInf;
    }
    source_ = out(s);
    sink_ = in(t);
  }

  int max_flow(int limit) {
    int flow = 0;
    std::vector<int> parent(size_);
    while (flow < limit && augment(parent)) ++flow;
    return flow;
  }

  /// Network nodes reachable from the source in the residual graph.
  std::vector<bool> residual_reach() const {
    std::vector<bool> seen(size_, false);
    std::deque<int> queue{source_};
    seen[source_] = true;
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      for (int b = 0; b < size_; ++b)
        if (!seen[b] && cap_[a * size_ + b] > 0) {
          seen[b] = true;
          queue.push_back(b);
        }
    }
    return seen;
  }

  static int in(Vertex v) { return 2 * v; }
  static int out(Vertex v) { return 2 * v + 1; }

 private:
  int& cap(int a, int b) { return cap_[a * size_ + b]; }

  bool augment(std::vector<int>& parent) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source_] = source_;
    std::deque<int> queue{source_};
    while (!queue.empty() && parent[sink_] < 0) {
      const int a = queue.front();
      queue.pop_front();
      for (int b = 0; b < size_; ++b)
        if (parent[b] < 0 && cap_[a * size_ + b] > 0) {
          parent[b] = a;
          queue.push_back(b);
        }
    }
    if (parent[sink_] < 0) return false;
    for (int b = sink_; b != source_; b = parent[b]) {
      --cap(parent[b], b);
      ++cap(b, parent[b]);
    }
    return true;
  }

  int size_;
  std::vector<int> cap_;
  int source_ = 0;
  int sink_ = 0;
};

struct CutSearch {
  int value;
  Vertex s = -1;
  Vertex t = -1;
};

CutSearch search_min_cut(const Graph& g) {
  const int n = g.order();
  CutSearch best{n - 1};
  for (Vertex i = 0; i < n && i <= best.value; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      const int f = local_connectivity(g, i, j, best.value);
      if (f < best.value || best.s < 0) best = {f, i, j};
    }
  return best;
}

}  // namespace

int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
  if (g.adjacent(s, t) || s == t) throw std::invalid_argument("local_connectivity needs distinct non-adjacent vertices");
  SplitNetwork net(g, s, t);
  return net.max_flow(limit);
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (g.is_complete()) return n - 1;
  if (!is_connected(g)) return 0;
  return search_min_cut(g).value;
}

std::optional<VertexSet> min_vertex_cut(const Graph& g) {
  const int n = g.order();
  if (n <= 1 || g.is_complete()) return std::nullopt;
  if (!is_connected(g)) return VertexSet{};
  const CutSearch best = search_min_cut(g);
  SplitNetwork net(g, best.s, best.t);
  net.max_flow(n);
  const auto seen = net.residual_reach();
  VertexSet cut;
  for (Vertex v = 0; v < n; ++v)
    if (seen[SplitNetwork::in(v)] && !seen[SplitNetwork::out(v)]) cut.insert(v);
  return cut;
}

// ------------------------------------------------------------- independence

namespace {

// Maximum clique of the complement graph with greedy colouring bounds.
class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : g_(g) {
    for (Vertex v = 0; v < g.order(); ++v)
      non_neighbors_[v] = g.vertices() - g.neighbors(v) - VertexSet::single(v);
  }

  VertexSet run() {
    expand({}, g_.vertices());
    return best_;
  }

 private:
  void expand(VertexSet current, VertexSet candidates) {
    std::vector<Vertex> order;
    std::vector<int> bound;
    colour(candidates, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + bound[i] <= best_.size()) return;
      const Vertex v = order[i];
      VertexSet next = current;
      next.insert(v);
      const VertexSet rest = candidates & non_neighbors_[v];
      if (rest.empty()) {
        if (next.size() > best_.size()) best_ = next;
      } else {
        expand(next, rest);
      }
      candidates.erase(v);
    }
  }

  // Colour classes are cliques of g, i.e. independent sets of the complement.
  void colour(VertexSet candidates, std::vector<Vertex>& order, std::vector<int>& bound) const {
    int colour_index = 0;
    VertexSet uncoloured = candidates;
    while (!uncoloured.empty()) {
      ++colour_index;
      VertexSet q = uncoloured;
      while (!q.empty()) {
        const Vertex v = q.min();
        q -= non_neighbors_[v];
        q.erase(v);
        uncoloured.erase(v);
        order.push_back(v);
        bound.push_back(colour_index);
      }
    }
  }

  const Graph& g_;
  std::array<VertexSet, kMaxVertices> non_neighbors_{};
  VertexSet best_;
};

bool extend_independent(const Graph& g, VertexSet pool, int need, VertexSet& chosen) {
  if (need == 0) return true;
  while (pool.size() >= need) {
    const Vertex v = pool.min();
    pool.erase(v);
    chosen.insert(v);
    if (extend_independent(g, pool - g.neighbors(v), need - 1, chosen)) return true;
    chosen.erase(v);
  }
  return false;
}

}  // namespace

VertexSet maximum_independent_set(const Graph& g) {
  if (g.order() == 0) return {};
  return IndependentSetSearch(g).run();
}

int independence_number(const Graph& g) { return maximum_independent_set(g).size(); }

std::optional<VertexSet> find_independent_subset(const Graph& g, VertexSet pool, int k) {
  VertexSet chosen;
  if (k < 0 || !extend_independent(g, pool & g.vertices(), k, chosen)) return std::nullopt;
  return chosen;
}

std::optional<FreenessWitness> find_induced_p2_kp1(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  for (const Edge& e : g.edges()) {
    const VertexSet ends{e.u, e.v};
    const VertexSet pool = g.vertices() - ends - neighborhood(g, ends);
    if (auto singles = find_independent_subset(g, pool, k)) return FreenessWitness{e, *singles};
  }
  return std::nullopt;
}

// ------------------------------------------------------------------- cycles

bool is_cycle(const Graph& g, const std::vector<Vertex>& order) {
  if (order.size() < 3) return false;
  VertexSet seen;
  for (Vertex v : order) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i)
    if (!g.adjacent(order[i], order[(i + 1) % order.size()])) return false;
  return true;
}

bool is_hamiltonian_cycle(const Graph& g, const std::vector<Vertex>& order) {
  return static_cast<int>(order.size()) == g.order() && is_cycle(g, order);
}

namespace {

class HamiltonSearch {
 public:
  explicit HamiltonSearch(const Graph& g) : g_(g) {}

  bool run() {
    path_ = {0};
    return extend(0, VertexSet::single(0));
  }
  std::vector<Vertex> path() const { return path_; }

 private:
  bool extend(Vertex tail, VertexSet visited) {
    const VertexSet rest = g_.vertices() - visited;
    if (rest.empty()) return g_.adjacent(tail, 0);
    if (!g_.neighbors(0).intersects(rest)) return false;
    const VertexSet open = rest | VertexSet{tail, 0};
    for (Vertex w : rest)
      if ((g_.neighbors(w) & open).size() < 2) return false;
    if (!rest.subset_of(reachable(g_, tail, rest | VertexSet::single(tail)))) return false;

    for (Vertex v : g_.neighbors(tail) & rest) {
      path_.push_back(v);
      VertexSet next = visited;
      next.insert(v);
      if (extend(v, next)) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> path_;
};

// Enumerates simple paths whose minimum vertex is their start.
class CycleSearch {
 public:
  CycleSearch(const Graph& g, int target, bool stop_at_target)
      : g_(g), target_(target), stop_(stop_at_target) {}

  std::optional<std::vector<Vertex>> run() {
    const int n = g_.order();
    for (Vertex s = 0; s < n && !done_; ++s) {
      if (n - s < target_) break;
      start_ = s;
      allowed_ = g_.vertices() - VertexSet::range(s);
      if (reachable(g_, s, allowed_).size() < target_) continue;
      path_ = {s};
      extend(s, VertexSet::single(s));
    }
    if (best_.empty()) return std::nullopt;
    return best_;
  }

 private:
  void extend(Vertex tail, VertexSet visited) {
    const int len = static_cast<int>(path_.size());
    if (len >= 3 && len >= target_ && g_.adjacent(tail, start_)) {
      best_ = path_;
      if (stop_ || len == g_.order()) {
        done_ = true;
        return;
      }
      target_ = len + 1;
    }
    const VertexSet rest = allowed_ - visited;
    const VertexSet reach = reachable(g_, tail, rest | VertexSet::single(tail));
    if (len + reach.size() - 1 < target_) return;
    if (!(reach & rest).intersects(g_.neighbors(start_))) return;

    for (Vertex v : g_.neighbors(tail) & rest) {
      path_.push_back(v);
      VertexSet next = visited;
      next.insert(v);
      extend(v, next);
      path_.pop_back();
      if (done_) return;
    }
  }

  const Graph& g_;
  int target_;
  bool stop_;
  bool done_ = false;
  Vertex start_ = 0;
  VertexSet allowed_;
  std::vector<Vertex> path_;
  std::vector<Vertex> best_;
};

}  // namespace

std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g) {
  const int n = g.order();
  if (n < 3 || !is_connected(g)) return std::nullopt;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) < 2) return std::nullopt;
  HamiltonSearch search(g);
  if (!search.run()) return std::nullopt;
  return search.path();
}

std::optional<std::vector<Vertex>> longest_cycle(const Graph& g) {
  return CycleSearch(g, 3, false).run();
}

std::optional<std::vector<Vertex>> find_cycle_at_least(const Graph& g, int min_length) {
  if (min_length > g.order()) return std::nullopt;
  return CycleSearch(g, std::max(3, min_length), true).run();
}

std::optional<std::vector<Vertex>> shortest_cycle_seed(const Graph& g) {
  const int n = g.order();
  for (Vertex s = 0; s < n; ++s) {
    const VertexSet nbrs = g.neighbors(s);
    if (nbrs.size() < 2) continue;
    std::vector<Vertex> best;
    for (Vertex w : nbrs) {
      // BFS from w in G - s; first other neighbour of s reached closes the cycle.
      std::vector<Vertex> parent(n, -1);
      parent[w] = w;
      std::deque<Vertex> queue{w};
      Vertex hit = -1;
      while (!queue.empty() && hit < 0) {
        const Vertex a = queue.front();
        queue.pop_front();
        for (Vertex b : g.neighbors(a)) {
          if (b == s || parent[b] >= 0) continue;
          parent[b] = a;
          if (nbrs.contains(b)) {
            hit = b;
            break;
          }
          queue.push_back(b);
        }
      }
      if (hit < 0) continue;
      std::vector<Vertex> cycle{s};
      std::vector<Vertex> back;
      for (Vertex v = hit; v != w; v = parent[v]) back.push_back(v);
      back.push_back(w);
      cycle.insert(cycle.end(), back.rbegin(), back.rend());
      if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
    }
    if (!best.empty()) return best;
  }
  return std::nullopt;
}

}  // namespace hamtough
