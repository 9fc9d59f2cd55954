#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hamtough/graph.hpp"
#include "hamtough/invariants.hpp"
#include "hamtough/oriented_cycle.hpp"
#include "hamtough/rational.hpp"

namespace hamtough {

/// Anchors x_1..x_t = N_C(x) in clockwise order (starting at the anchor of
/// minimum index), the segments strictly between consecutive anchors, and the
/// parity set S' of odd-position segment vertices.
struct SegmentPartition {
  Vertex x = -1;
  std::vector<Vertex> anchors;
  std::vector<std::vector<Vertex>> segments;
  VertexSet sprime;

  bool has_empty_segment() const;
  bool all_segments_odd() const;
};

/// Throws CycleError if x lies on c, std::invalid_argument if N_C(x) is empty.
SegmentPartition partition(const Graph& g, const OrientedCycle& c, Vertex x);

enum class MoveKind { kM1, kM2, kM3, kM4, kM5, kM6, kM7, kFallback };

std::string_view to_string(MoveKind kind);
/// The segment-splicing pattern that builds the longer cycle.
std::string_view rule_of(MoveKind kind);

struct Move {
  MoveKind kind;
  std::vector<Vertex> params;
  std::vector<Vertex> result;

  std::string_view rule() const { return rule_of(kind); }
};

/// First applicable rotation in kind order M1..M7, parameters in ascending
/// vertex order. Every returned result is a verified, strictly longer cycle.
std::optional<Move> find_move(const Graph& g, const OrientedCycle& c, int k);

struct HamiltonianCert {
  std::vector<Vertex> order;
};
/// comps = c(G-S) >= 2 and ratio = |S|/comps < t.
struct ToughCutCert {
  VertexSet cut;
  int components = 0;
  Rational ratio;
};
/// |S| < required and G-S disconnected.
struct VertexCutCert {
  VertexSet cut;
  int required = 0;
};
struct InducedCert {
  FreenessWitness witness;
  int k = 0;
};

using Certificate = std::variant<HamiltonianCert, ToughCutCert, VertexCutCert, InducedCert>;

std::string_view certificate_kind(const Certificate& cert);

enum class CertificateSource { kCycle, kStructural, kSearch };
std::string_view to_string(CertificateSource source);

enum class ExtractionMode {
  kStructural,  ///< candidates read off the cycle structure only
  kExhaustive,  ///< structural, then first-principles search
};

/// Tries ToughCut, then Induced, then VertexCut candidates; each is validated
/// before being returned.
std::optional<Certificate> extract_certificate(const Graph& g, const OrientedCycle& c, int k,
                                               Rational t, int required_connectivity,
                                               ExtractionMode mode = ExtractionMode::kStructural);

bool validate(const Graph& g, const Certificate& cert, int k, Rational t,
              int required_connectivity);

enum class EngineMode { kTheorem5, kTheorem6 };
enum class SeedCycle { kShortest, kLongest };

std::string_view to_string(EngineMode mode);
std::string_view to_string(SeedCycle seed);

/// 2k for theorem5, 2k-2 for theorem6 (which needs k >= 3).
int required_connectivity(EngineMode mode, int k);

struct EngineOptions {
  SeedCycle seed = SeedCycle::kShortest;
  /// Overrides the mode's connectivity requirement for VertexCut certificates.
  std::optional<int> required_connectivity;
};

struct EngineTrace {
  std::vector<Vertex> seed;
  std::vector<Move> steps;
  std::optional<Certificate> outcome;
  CertificateSource source = CertificateSource::kCycle;
  int fallback_count = 0;
  int required_connectivity = 0;
  std::string diagnostics;
};

class NoCycleError : public std::invalid_argument {
 public:
  NoCycleError() : std::invalid_argument("no cycle exists") {}
};

/// Lengthens a seed cycle by rotations (falling back to exact search) until it
/// is Hamiltonian or a hypothesis-violation certificate is found.
/// Throws std::invalid_argument for n < 3 or disconnected g, NoCycleError for forests.
EngineTrace run(const Graph& g, int k, EngineMode mode, Rational t, const EngineOptions& options = {});

}  // namespace hamtough
