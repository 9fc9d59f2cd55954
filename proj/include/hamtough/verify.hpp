#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamtough/engine.hpp"
#include "hamtough/graph.hpp"
#include "hamtough/invariants.hpp"

namespace hamtough {

enum class Preset { kTheorem5, kTheorem6, kCorollary7, kChvatalErdos };

std::string_view to_string(Preset preset);
Preset parse_preset(std::string_view name);

/// Which theorem's hypotheses a graph must satisfy to be checked.
///   theorem5:      1-tough, 2k-connected, (P2 ∪ kP1)-free
///   theorem6:      k >= 3, 1-tough, (2k-2)-connected, (P2 ∪ kP1)-free
///   corollary7:    k >= 3, (k-1)-tough, (P2 ∪ kP1)-free
///   chvatal_erdos: max{2,k}-connected, independence number <= k
struct HypothesisFilter {
  int k = 1;
  Preset mode = Preset::kTheorem5;
  int min_n = 3;

  /// Throws std::invalid_argument for k out of range for the mode.
  void check() const;

  EngineMode engine_mode() const;
  int engine_required_connectivity() const;
};

struct GraphInvariants {
  Rational toughness;
  int connectivity = 0;
  int independence = 0;
  std::optional<FreenessWitness> witness;  ///< induced P2 ∪ kP1, if any
};

GraphInvariants compute_invariants(const Graph& g, int k);
bool passes(const HypothesisFilter& filter, const Graph& g, const GraphInvariants& inv);

struct GraphRecord {
  std::size_t line = 0;
  std::string graph6;
  int n = 0;
  bool in_range = true;  ///< within --max-n
  std::optional<GraphInvariants> invariants;
  bool passes_filter = false;
  std::optional<bool> hamiltonian;
  std::vector<Vertex> cycle;
  std::optional<EngineTrace> engine;
  std::string engine_skipped;  ///< why the engine did not run, when it did not
  bool certificate_valid = true;
  bool failed = false;
};

struct InputLine {
  std::size_t number = 0;  ///< 1-based
  std::string text;
};

/// Non-empty lines of a graph6 stream with their line numbers.
std::vector<InputLine> read_lines(std::istream& in);

struct MalformedLine {
  std::size_t number = 0;
  std::string message;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VerifyOptions {
  HypothesisFilter filter;
  int workers = 1;
  bool strict = false;
  std::optional<int> max_n;
  SeedCycle seed = SeedCycle::kShortest;
  bool engine_all = false;  ///< also run the engine on graphs the filter rejects
};

struct Report {
  std::vector<GraphRecord> records;  ///< in input order
  std::vector<MalformedLine> malformed;
  std::size_t total = 0;  ///< parsed graphs
  std::size_t filtered = 0;
  std::size_t rejected = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t engine_runs = 0;
  std::size_t invalid_certificates = 0;
  std::size_t unresolved = 0;  ///< engine ended without any certificate
  std::map<int, std::size_t> filtered_by_n;
  double wall_ms = 0;

  bool ok() const { return failed == 0 && invalid_certificates == 0 && unresolved == 0; }
};

GraphRecord verify_graph(const Graph& g, const VerifyOptions& options);

/// Throws InputError on the first malformed line when options.strict.
Report run_verify(const std::vector<InputLine>& lines, const VerifyOptions& options);

struct InvariantSelection {
  bool toughness = false;
  bool connectivity = false;
  bool independence = false;
  bool freeness = false;
  bool hamiltonicity = false;
  int k = 1;

  static InvariantSelection all(int k = 1) { return {true, true, true, true, true, k}; }
};

struct CrosscheckOutcome {
  std::size_t checked = 0;
  std::size_t skipped = 0;  ///< n > max_n
  std::size_t kappa_tau_checks = 0;
  std::optional<std::string> failure;  ///< first failed assertion, with graph6
};

/// The identities that must hold on every graph: kappa >= 2 tau (non-complete,
/// connected), Hamiltonian => 1-tough, max-flow connectivity == brute force,
/// freeness fast path == subset brute force for k = 1..3, early-exit
/// 1-toughness == (toughness >= 1). Returns the first failure.
std::optional<std::string> crosscheck_graph(const Graph& g);

}  // namespace hamtough
