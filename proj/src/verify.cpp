#include "hamtough/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "hamtough/graph_io.hpp"
#include "hamtough/reference.hpp"

namespace hamtough {

std::string_view to_string(Preset preset) {
  switch (preset) {
    case Preset::kTheorem5: return "theorem5";
    case Preset::kTheorem6: return "theorem6";
    case Preset::kCorollary7: return "corollary7";
    case Preset::kChvatalErdos: return "chvatal_erdos";
  }
  return "?";
}

Preset parse_preset(std::string_view name) {
  for (Preset p : {Preset::kTheorem5, Preset::kTheorem6, Preset::kCorollary7, Preset::kChvatalErdos})
    if (to_string(p) == name) return p;
  throw std::invalid_argument("unknown mode: " + std::string(name));
}

void HypothesisFilter::check() const {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if ((mode == Preset::kTheorem6 || mode == Preset::kCorollary7) && k < 3)
    throw std::invalid_argument(std::string(to_string(mode)) + " needs k >= 3");
}

EngineMode HypothesisFilter::engine_mode() const {
  return (mode == Preset::kTheorem6 || mode == Preset::kCorollary7) ? EngineMode::kTheorem6
                                                                     : EngineMode::kTheorem5;
}

int HypothesisFilter::engine_required_connectivity() const {
  if (mode == Preset::kChvatalErdos) return std::max(2, k);
  return required_connectivity(engine_mode(), k);
}

GraphInvariants compute_invariants(const Graph& g, int k) {
  GraphInvariants inv;
  inv.toughness = toughness(g);
  inv.connectivity = vertex_connectivity(g);
  inv.independence = independence_number(g);
  inv.witness = find_induced_p2_kp1(g, k);
  return inv;
}

bool passes(const HypothesisFilter& filter, const Graph& g, const GraphInvariants& inv) {
  if (g.order() < std::max(filter.min_n, 3) || !is_connected(g)) return false;
  const int k = filter.k;
  switch (filter.mode) {
    case Preset::kTheorem5:
      return inv.toughness >= Rational(1) && inv.connectivity >= 2 * k && !inv.witness;
    case Preset::kTheorem6:
      return inv.toughness >= Rational(1) && inv.connectivity >= 2 * k - 2 && !inv.witness;
    case Preset::kCorollary7:
      return inv.toughness >= Rational(k - 1) && !inv.witness;
    case Preset::kChvatalErdos:
      return inv.connectivity >= std::max(2, k) && inv.independence <= k;
  }
  return false;
}

GraphRecord verify_graph(const Graph& g, const VerifyOptions& options) {
  const HypothesisFilter& filter = options.filter;
  GraphRecord rec;
  rec.n = g.order();
  rec.graph6 = to_graph6(g);
  if (options.max_n && g.order() > *options.max_n) {
    rec.in_range = false;
    rec.engine_skipped = "n exceeds max-n";
    return rec;
  }
  rec.invariants = compute_invariants(g, filter.k);
  rec.passes_filter = passes(filter, g, *rec.invariants);

  if (rec.passes_filter) {
    if (auto cycle = hamiltonian_cycle(g)) {
      rec.hamiltonian = true;
      rec.cycle = std::move(*cycle);
    } else {
      rec.hamiltonian = false;
    }
  }

  if (rec.passes_filter || options.engine_all) {
    if (g.order() < 3) {
      rec.engine_skipped = "fewer than three vertices";
    } else if (!is_connected(g)) {
      rec.engine_skipped = "disconnected";
    } else {
      EngineOptions eo;
      eo.seed = options.seed;
      eo.required_connectivity = filter.engine_required_connectivity();
      try {
        rec.engine = run(g, filter.k, filter.engine_mode(), Rational(1), eo);
      } catch (const NoCycleError& e) {
        rec.engine_skipped = e.what();
      }
    }
  }

  if (rec.engine && rec.engine->outcome)
    rec.certificate_valid = validate(g, *rec.engine->outcome, filter.k, Rational(1),
                                     rec.engine->required_connectivity);

  const bool engine_hamiltonian =
      rec.engine && rec.engine->outcome && std::holds_alternative<HamiltonianCert>(*rec.engine->outcome);
  if (rec.passes_filter) rec.failed = !rec.hamiltonian.value_or(false) || !engine_hamiltonian;
  if (!rec.certificate_valid) rec.failed = true;
  return rec;
}

std::vector<InputLine> read_lines(std::istream& in) {
  std::vector<InputLine> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    out.push_back({number, text});
  }
  return out;
}

Report run_verify(const std::vector<InputLine>& lines, const VerifyOptions& options) {
  options.filter.check();
  const auto start = std::chrono::steady_clock::now();
  Report report;

  std::vector<Graph> graphs;
  std::vector<std::size_t> numbers;
  for (const InputLine& line : lines) {
    try {
      graphs.push_back(parse_graph6(line.text));
      numbers.push_back(line.number);
    } catch (const ParseError& e) {
      if (options.strict)
        throw InputError("line " + std::to_string(line.number) + ": " + e.what());
      report.malformed.push_back({line.number, e.what()});
    }
  }

  report.records.resize(graphs.size());
  const long count = static_cast<long>(graphs.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(std::max(1, options.workers))
  for (long i = 0; i < count; ++i) {
    report.records[i] = verify_graph(graphs[i], options);
    report.records[i].line = numbers[i];
  }

  report.total = report.records.size();
  for (const GraphRecord& rec : report.records) {
    if (rec.passes_filter) {
      ++report.filtered;
      ++report.filtered_by_n[rec.n];
    } else {
      ++report.rejected;
    }
    if (rec.engine) {
      ++report.engine_runs;
      if (!rec.engine->outcome) ++report.unresolved;
    }
    if (!rec.certificate_valid) ++report.invalid_certificates;
    if (rec.failed) ++report.failed;
    else if (rec.passes_filter) ++report.passed;
  }
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::optional<std::string> crosscheck_graph(const Graph& g) {
  const std::string id = to_graph6(g);
  auto fail = [&](const std::string& what) { return what + " on " + id; };

  const int kappa = vertex_connectivity(g);
  if (kappa != reference::vertex_connectivity(g))
    return fail("max-flow connectivity differs from brute force");

  const Rational tau = toughness(g);
  if (g.order() >= 1 && is_t_tough(g, Rational(1)) != (tau >= Rational(1)))
    return fail("early-exit 1-toughness disagrees with exact toughness");
  if (tau != reference::toughness(g)) return fail("toughness differs from brute force");

  if (!g.is_complete() && is_connected(g) && !tau.is_infinite() && kappa * tau.den() < 2 * tau.num())
    return fail("connectivity below twice the toughness");

  if (hamiltonian_cycle(g) && g.order() >= 1 && !is_t_tough(g, Rational(1)))
    return fail("Hamiltonian graph that is not 1-tough");

  for (int k = 1; k <= 3; ++k)
    if (find_induced_p2_kp1(g, k).has_value() != reference::contains_induced_p2_kp1(g, k))
      return fail("P2 ∪ " + std::to_string(k) + "P1 detection differs from subset brute force");
  return std::nullopt;
}

}  // namespace hamtough
