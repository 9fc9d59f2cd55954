#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "hamtough/vertex_set.hpp"

namespace hamtough {

struct Edge {
  Vertex u;
  Vertex v;

  /// Orders the endpoints so that u < v.
  static Edge canonical(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1 (n <= 64).
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on an endpoint >= n, a self-loop, or n outside 0..64.
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Rows must be symmetric and irreflexive; used by decoders that build rows directly.
  static Graph from_adjacency(int n, std::span<const std::uint64_t> rows);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return VertexSet(adj_[v]); }
  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  int degree(Vertex v) const { return neighbors(v).size(); }
  int edge_count() const;
  bool is_complete() const;

  /// Edges in canonical (u < v, lexicographic) order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& o) const;

 private:
  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

/// Connected components of G - removed, ordered by minimum vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet removed = {});

/// Number of components of G - removed; cheaper than components().size().
int component_count(const Graph& g, VertexSet removed = {});

/// Vertices of `within` reachable from `start` inside G[within].
VertexSet reachable(const Graph& g, Vertex start, VertexSet within);

/// Union of the open neighbourhoods of the members of s.
VertexSet neighborhood(const Graph& g, VertexSet s);

bool is_connected(const Graph& g);
bool is_independent(const Graph& g, VertexSet s);

}  // namespace hamtough
