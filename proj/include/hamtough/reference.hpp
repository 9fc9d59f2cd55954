#pragma once

#include <optional>
#include <vector>

#include "hamtough/graph.hpp"
#include "hamtough/rational.hpp"

/// Serial brute-force implementations of every invariant. They share no code
/// with the fast paths beyond Graph itself and exist to cross-check them.
namespace hamtough::reference {

/// Components counted with union-find over the edge list.
int count_components(const Graph& g, VertexSet removed);

Rational toughness(const Graph& g);

/// Minimum |S| over all S with G-S disconnected; n-1 for complete graphs.
int vertex_connectivity(const Graph& g);

int independence_number(const Graph& g);

/// Some (k+2)-subset induces exactly one edge.
bool contains_induced_p2_kp1(const Graph& g, int k);

/// Held-Karp subset dynamic programming; n <= 20.
bool is_hamiltonian(const Graph& g);
/// Largest cycle length, 0 for forests; same dynamic programme.
int circumference(const Graph& g);

}  // namespace hamtough::reference
