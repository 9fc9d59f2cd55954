#include "hamtough/graph.hpp"

#include <string>

namespace hamtough {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices)
    throw GraphError("vertex count " + std::to_string(n) + " outside 0..64");
}

}  // namespace

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  check_order(n);
  Graph g;
  g.n_ = n;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") has an endpoint out of range");
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    g.adj_[e.u] |= std::uint64_t{1} << e.v;
    g.adj_[e.v] |= std::uint64_t{1} << e.u;
  }
  return g;
}

Graph Graph::from_adjacency(int n, std::span<const std::uint64_t> rows) {
  check_order(n);
  if (static_cast<int>(rows.size()) != n) throw GraphError("adjacency row count mismatch");
  Graph g;
  g.n_ = n;
  const std::uint64_t universe = VertexSet::range(n).bits();
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~universe) throw GraphError("adjacency row has bits beyond n");
    if ((rows[v] >> v) & 1U) throw GraphError("self-loop at vertex " + std::to_string(v));
    g.adj_[v] = rows[v];
  }
  for (int u = 0; u < n; ++u)
    for (Vertex v : VertexSet(rows[u]))
      if (!((rows[v] >> u) & 1U)) throw GraphError("adjacency is not symmetric");
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

bool Graph::is_complete() const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) != n_ - 1) return false;
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u) - VertexSet::range(u + 1)) out.push_back({u, v});
  return out;
}

bool Graph::operator==(const Graph& o) const {
  if (n_ != o.n_) return false;
  for (int v = 0; v < n_; ++v)
    if (adj_[v] != o.adj_[v]) return false;
  return true;
}

VertexSet reachable(const Graph& g, Vertex start, VertexSet within) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g, VertexSet removed) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices() - removed;
  while (!rest.empty()) {
    VertexSet comp = reachable(g, rest.min(), rest);
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

int component_count(const Graph& g, VertexSet removed) {
  int count = 0;
  VertexSet rest = g.vertices() - removed;
  while (!rest.empty()) {
    rest -= reachable(g, rest.min(), rest);
    ++count;
  }
  return count;
}

VertexSet neighborhood(const Graph& g, VertexSet s) {
  VertexSet out;
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_independent(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

}  // namespace hamtough
