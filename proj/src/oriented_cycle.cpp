#include "hamtough/oriented_cycle.hpp"

#include <string>

#include "hamtough/invariants.hpp"

namespace hamtough {

OrientedCycle::OrientedCycle(const Graph& g, std::vector<Vertex> order) : order_(std::move(order)) {
  if (!is_cycle(g, order_)) throw CycleError("vertex sequence is not a cycle of the graph");
  pos_.fill(-1);
  for (int i = 0; i < length(); ++i) {
    pos_[order_[i]] = i;
    members_.insert(order_[i]);
  }
}

int OrientedCycle::position(Vertex v) const {
  if (!contains(v)) throw CycleError("vertex " + std::to_string(v) + " is not on the cycle");
  return pos_[v];
}

Vertex OrientedCycle::jump(Vertex u, long offset) const {
  const long len = length();
  long p = (position(u) + offset) % len;
  if (p < 0) p += len;
  return order_[p];
}

int OrientedCycle::distance(Vertex u, Vertex v) const {
  const int d = position(v) - position(u);
  return d < 0 ? d + length() : d;
}

std::vector<Vertex> OrientedCycle::segment(Vertex u, Vertex v, Direction dir) const {
  const int steps = dir == Direction::kForward ? distance(u, v) : distance(v, u);
  const long unit = dir == Direction::kForward ? 1 : -1;
  std::vector<Vertex> out;
  out.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i) out.push_back(jump(u, unit * i));
  return out;
}

VertexSet OrientedCycle::plus_set(VertexSet s) const {
  VertexSet out;
  for (Vertex v : s) out.insert(succ(v));
  return out;
}

}  // namespace hamtough
