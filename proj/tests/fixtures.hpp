#pragma once

#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "hamtough/graph.hpp"
#include "hamtough/graph_io.hpp"

namespace fixtures {

using hamtough::Edge;
using hamtough::Graph;

inline Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Edge::canonical(i, (i + 1) % n));
  return Graph::from_edge_list(n, edges);
}

inline Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edge_list(n, edges);
}

/// Outer 5-cycle 0..4, spokes i ~ i+5, inner pentagram i+5 ~ (i+2 mod 5)+5.
inline Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(Edge::canonical(i, (i + 1) % 5));
    edges.push_back({i, i + 5});
    edges.push_back(Edge::canonical(i + 5, (i + 2) % 5 + 5));
  }
  return Graph::from_edge_list(10, edges);
}

/// Cycle 0..5 plus vertex 6 adjacent to the given cycle vertices.
inline Graph c6_plus(std::initializer_list<int> attach) {
  std::vector<Edge> edges;
  for (int i = 0; i < 6; ++i) edges.push_back(Edge::canonical(i, (i + 1) % 6));
  for (int a : attach) edges.push_back({a, 6});
  return Graph::from_edge_list(7, edges);
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph::from_edge_list(n, edges);
}

inline std::vector<std::string> corpus_lines(const std::string& name) {
  std::ifstream in(std::string(HAMTOUGH_CORPUS_DIR) + "/" + name);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

}  // namespace fixtures
