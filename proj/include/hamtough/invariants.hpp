#pragma once

#include <optional>
#include <vector>

#include "hamtough/graph.hpp"
#include "hamtough/rational.hpp"

namespace hamtough {

/// An induced copy of P2 ∪ kP1: the edge plus k singles, pairwise
/// non-adjacent and non-adjacent to both endpoints.
struct FreenessWitness {
  Edge edge;
  VertexSet singles;

  bool valid_in(const Graph& g, int k) const;
  bool operator==(const FreenessWitness&) const = default;
};

struct ToughnessResult {
  Rational value;
  /// The minimising set (lowest mask among ties); empty when value is infinite.
  VertexSet cut;
  int cut_components = 0;
};

/// Exact toughness by enumerating every S ⊆ V with c(G-S) >= 2.
/// Complete graphs (and n <= 1) give Infinite; disconnected graphs give 0.
/// Switches to the OpenMP kernel for n >= kParallelToughnessThreshold.
ToughnessResult toughness_with_cut(const Graph& g);
Rational toughness(const Graph& g);

inline constexpr int kParallelToughnessThreshold = 16;

/// Kernels behind toughness_with_cut; both return identical results.
ToughnessResult toughness_serial(const Graph& g);
ToughnessResult toughness_parallel(const Graph& g, int threads = 0);

/// First S (ascending mask) with c(G-S) >= 2 and |S| < t * c(G-S), if any.
std::optional<VertexSet> find_tough_violation(const Graph& g, Rational t);

/// toughness(g) >= t with early exit; t must be finite and positive.
bool is_t_tough(const Graph& g, Rational t);

/// Vertex connectivity via unit-capacity max-flow on the split graph,
/// checking pairs (v_i, v_j), i <= current bound (Even's scheme).
/// n-1 for complete graphs, 0 for disconnected or n <= 1.
int vertex_connectivity(const Graph& g);

/// A minimum vertex cut; nullopt for complete graphs (no cut exists).
std::optional<VertexSet> min_vertex_cut(const Graph& g);

/// Max-flow between non-adjacent s and t in the vertex-split network, stopping at `limit`.
int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit);

/// Maximum independent set by branch and bound with greedy colouring bounds.
VertexSet maximum_independent_set(const Graph& g);
int independence_number(const Graph& g);

/// Lexicographically first independent k-subset of `pool`, if any.
std::optional<VertexSet> find_independent_subset(const Graph& g, VertexSet pool, int k);

/// First witness over edges in canonical order; singles lexicographically first.
std::optional<FreenessWitness> find_induced_p2_kp1(const Graph& g, int k);

/// Exact backtracking; the returned order starts at vertex 0. None for n < 3.
std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g);

/// A longest cycle (exact branch and bound), or none for forests.
std::optional<std::vector<Vertex>> longest_cycle(const Graph& g);

/// Any cycle with at least `min_length` vertices, or none.
std::optional<std::vector<Vertex>> find_cycle_at_least(const Graph& g, int min_length);

/// Shortest cycle through the lowest-index vertex that lies on a cycle.
std::optional<std::vector<Vertex>> shortest_cycle_seed(const Graph& g);

/// True iff `order` lists distinct vertices, has length >= 3, and cyclically
/// consecutive entries are adjacent.
bool is_cycle(const Graph& g, const std::vector<Vertex>& order);
bool is_hamiltonian_cycle(const Graph& g, const std::vector<Vertex>& order);

}  // namespace hamtough
