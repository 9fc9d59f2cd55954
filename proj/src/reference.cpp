#include "hamtough/reference.hpp"

#include <numeric>
#include <stdexcept>

namespace hamtough::reference {

namespace {

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

void require_small(const Graph& g, int limit) {
  if (g.order() > limit) throw std::invalid_argument("reference oracle limited to small n");
}

// reach[mask][v]: a path starting at min(mask), covering mask, ending at v.
std::vector<std::uint32_t> path_table(const Graph& g) {
  const int n = g.order();
  const std::uint32_t full = 1U << n;
  std::vector<std::uint32_t> ends(full, 0);
  for (int s = 0; s < n; ++s) ends[1U << s] = 1U << s;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (ends[mask] == 0) continue;
    const int low = __builtin_ctz(mask);
    for (int v = 0; v < n; ++v) {
      if (!((ends[mask] >> v) & 1U)) continue;
      for (int w = low + 1; w < n; ++w)
        if (!((mask >> w) & 1U) && g.adjacent(v, w)) ends[mask | (1U << w)] |= 1U << w;
    }
  }
  return ends;
}

}  // namespace

int count_components(const Graph& g, VertexSet removed) {
  const int n = g.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& e : g.edges()) {
    if (removed.contains(e.u) || removed.contains(e.v)) continue;
    parent[find_root(parent, e.u)] = find_root(parent, e.v);
  }
  int count = 0;
  for (int v = 0; v < n; ++v)
    if (!removed.contains(v) && find_root(parent, v) == v) ++count;
  return count;
}

Rational toughness(const Graph& g) {
  require_small(g, 24);
  std::optional<Rational> best;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
    const VertexSet s(m);
    const int c = count_components(g, s);
    if (c < 2) continue;
    const Rational r(s.size(), c);
    if (!best || r < *best) best = r;
  }
  return best ? *best : Rational::infinite();
}

int vertex_connectivity(const Graph& g) {
  require_small(g, 24);
  const int n = g.order();
  int best = n > 0 ? n - 1 : 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const VertexSet s(m);
    if (s.size() < best && count_components(g, s) >= 2) best = s.size();
  }
  return best;
}

int independence_number(const Graph& g) {
  require_small(g, 24);
  int best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
    const VertexSet s(m);
    if (s.size() <= best) continue;
    bool independent = true;
    for (const Edge& e : g.edges())
      if (s.contains(e.u) && s.contains(e.v)) {
        independent = false;
        break;
      }
    if (independent) best = s.size();
  }
  return best;
}

bool contains_induced_p2_kp1(const Graph& g, int k) {
  require_small(g, 24);
  const auto edges = g.edges();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
    const VertexSet s(m);
    if (s.size() != k + 2) continue;
    int inside = 0;
    for (const Edge& e : edges)
      if (s.contains(e.u) && s.contains(e.v)) ++inside;
    if (inside == 1) return true;
  }
  return false;
}

bool is_hamiltonian(const Graph& g) {
  const int n = g.order();
  return n >= 3 && circumference(g) == n;
}

int circumference(const Graph& g) {
  require_small(g, 20);
  const int n = g.order();
  const auto ends = path_table(g);
  int best = 0;
  for (std::uint32_t mask = 1; mask < ends.size(); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size < 3 || size <= best) continue;
    const int low = __builtin_ctz(mask);
    for (int v = 0; v < n; ++v)
      if (((ends[mask] >> v) & 1U) && g.adjacent(v, low)) {
        best = size;
        break;
      }
  }
  return best;
}

}  // namespace hamtough::reference
