#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <vector>

#include "hamtough/graph.hpp"

namespace hamtough {

enum class Direction { kForward, kBackward };

class CycleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A cycle of G with a fixed clockwise orientation: O(1) successor,
/// predecessor, jump and membership through an inverse position table.
class OrientedCycle {
 public:
  /// Throws CycleError unless `order` is a cycle of g (length >= 3).
  OrientedCycle(const Graph& g, std::vector<Vertex> order);

  int length() const { return static_cast<int>(order_.size()); }
  std::span<const Vertex> order() const { return order_; }
  const std::vector<Vertex>& sequence() const { return order_; }
  VertexSet vertices() const { return members_; }
  bool contains(Vertex v) const { return v >= 0 && v < kMaxVertices && members_.contains(v); }
  int position(Vertex v) const;

  /// Vertex `offset` steps clockwise from u (negative = counter-clockwise).
  Vertex jump(Vertex u, long offset) const;
  Vertex succ(Vertex u) const { return jump(u, 1); }
  Vertex pred(Vertex u) const { return jump(u, -1); }

  /// Clockwise steps from u to v, in 0..length-1.
  int distance(Vertex u, Vertex v) const;

  /// Inclusive walk from u to v; u == v gives the single vertex.
  std::vector<Vertex> segment(Vertex u, Vertex v, Direction dir) const;

  /// Image of s under the successor map.
  VertexSet plus_set(VertexSet s) const;

 private:
  std::vector<Vertex> order_;
  std::array<int, kMaxVertices> pos_{};
  VertexSet members_;
};

}  // namespace hamtough
