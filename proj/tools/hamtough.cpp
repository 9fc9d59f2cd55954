// hamtough: invariants, rotation-engine traces and exhaustive theorem checks
// over graph6 corpora.
//
//   hamtough verify     [FILE] --mode theorem5 --k 1 [--workers N] [--emit jsonl|summary]
//   hamtough invariants [FILE] [--which toughness,connectivity,...] [--k K]
//   hamtough trace      (--graph6 STR | --file PATH) --k K --mode theorem5|theorem6
//   hamtough crosscheck [FILE] [--max-n 12]
//
// Exit status: 0 verified, 1 counterexample or invalid certificate, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hamtough/graph_io.hpp"
#include "hamtough/json_io.hpp"
#include "hamtough/verify.hpp"

using namespace hamtough;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

std::vector<InputLine> load(const std::string& path) {
  if (path.empty() || path == "-") return read_lines(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_lines(in);
}

SeedCycle parse_seed(const std::string& s) {
  return s == "longest" ? SeedCycle::kLongest : SeedCycle::kShortest;
}

void report_malformed(const std::vector<MalformedLine>& malformed) {
  for (const auto& m : malformed) std::cerr << "line " << m.number << ": " << m.message << '\n';
}

int cmd_verify(const std::string& input, const VerifyOptions& options, const std::string& emit) {
  const Report report = run_verify(load(input), options);
  report_malformed(report.malformed);
  if (emit == "jsonl")
    for (const GraphRecord& rec : report.records) std::cout << record_to_json(rec).dump() << '\n';
  for (const GraphRecord& rec : report.records) {
    if (!rec.failed && !(rec.engine && !rec.engine->outcome)) continue;
    std::cerr << "!!! COUNTEREXAMPLE OR INVALID CERTIFICATE at line " << rec.line << ": " << rec.graph6
              << '\n';
    if (rec.engine)
      std::cerr << trace_to_json(*rec.engine, rec.graph6, options.filter.k, options.filter.engine_mode(),
                                 Rational(1))
                       .dump(2)
                << '\n';
  }
  std::cerr << summary_to_json(report, options.filter).dump() << '\n';
  return report.ok() ? kExitOk : kExitFailure;
}

int cmd_invariants(const std::string& input, const std::string& which_list, int k, bool strict) {
  InvariantSelection which;
  which.k = k;
  std::stringstream ss(which_list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item == "toughness") which.toughness = true;
    else if (item == "connectivity") which.connectivity = true;
    else if (item == "independence") which.independence = true;
    else if (item == "freeness") which.freeness = true;
    else if (item == "hamiltonicity") which.hamiltonicity = true;
    else if (item == "all") which = InvariantSelection::all(k);
    else throw InputError("unknown invariant: " + item);
  }
  for (const InputLine& line : load(input)) {
    try {
      const Graph g = parse_graph6(line.text);
      std::cout << invariants_to_json(g, to_graph6(g), which).dump() << '\n';
    } catch (const ParseError& e) {
      if (strict) throw InputError("line " + std::to_string(line.number) + ": " + e.what());
      std::cerr << "line " << line.number << ": " << e.what() << '\n';
    }
  }
  return kExitOk;
}

int cmd_trace(const std::string& graph6, const std::string& file, int k, const std::string& mode_name,
              const std::string& seed, const std::string& t_text) {
  Graph g;
  if (!graph6.empty()) {
    g = parse_graph6(graph6);
  } else {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    g = parse_graph_text(buf.str());
  }
  const EngineMode mode = mode_name == "theorem6" ? EngineMode::kTheorem6 : EngineMode::kTheorem5;
  const Rational t = Rational::parse(t_text);
  EngineOptions options;
  options.seed = parse_seed(seed);
  const EngineTrace trace = run(g, k, mode, t, options);
  const std::string id = to_graph6(g);

  std::cerr << "graph " << id << "  n=" << g.order() << "  k=" << k << "  mode=" << to_string(mode)
            << "  required connectivity=" << trace.required_connectivity << '\n';
  std::cerr << "seed cycle (" << trace.seed.size() << "):";
  for (Vertex v : trace.seed) std::cerr << ' ' << v;
  std::cerr << '\n';
  for (const Move& m : trace.steps) {
    std::cerr << "  " << to_string(m.kind) << " [";
    for (std::size_t i = 0; i < m.params.size(); ++i) std::cerr << (i ? " " : "") << m.params[i];
    std::cerr << "] -> length " << m.result.size() << "   " << m.rule() << '\n';
  }
  bool valid = false;
  if (trace.outcome) {
    valid = validate(g, *trace.outcome, k, t, trace.required_connectivity);
    std::cerr << "outcome: " << to_json(*trace.outcome).dump() << " (" << to_string(trace.source)
              << ", " << (valid ? "valid" : "INVALID") << ")\n";
  } else {
    std::cerr << "outcome: none (" << trace.diagnostics << ")\n";
  }
  std::cout << trace_to_json(trace, id, k, mode, t).dump() << '\n';
  return valid ? kExitOk : kExitFailure;
}

int cmd_crosscheck(const std::string& input, int max_n, bool strict) {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  for (const InputLine& line : load(input)) {
    Graph g;
    try {
      g = parse_graph6(line.text);
    } catch (const ParseError& e) {
      if (strict) throw InputError("line " + std::to_string(line.number) + ": " + e.what());
      std::cerr << "line " << line.number << ": " << e.what() << '\n';
      continue;
    }
    if (g.order() > max_n) {
      ++skipped;
      continue;
    }
    if (auto failure = crosscheck_graph(g)) {
      std::cerr << "crosscheck failed at line " << line.number << ": " << *failure << '\n';
      return kExitFailure;
    }
    ++checked;
  }
  std::cerr << Json{{"checked", checked}, {"skipped", skipped}, {"failures", 0}}.dump() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toughness, connectivity and Hamiltonicity verification for small graphs"};
  app.require_subcommand(1);

  std::string input;
  int k = 1;
  std::string mode = "theorem5";
  int workers = 1;
  bool strict = false;
  int max_n = 64;
  std::string emit = "jsonl";
  std::string seed = "shortest";
  bool engine_all = false;

  auto* verify = app.add_subcommand("verify", "check a theorem preset over a graph6 stream");
  verify->add_option("input", input, "graph6 file (default stdin)");
  verify->add_option("--k", k, "k in P2 ∪ kP1")->check(CLI::PositiveNumber);
  verify->add_option("--mode", mode)->check(CLI::IsMember({"theorem5", "theorem6", "corollary7", "chvatal_erdos"}));
  verify->add_option("--workers", workers)->check(CLI::PositiveNumber);
  verify->add_flag("--strict", strict, "abort on the first malformed line");
  verify->add_option("--max-n", max_n, "skip graphs with more vertices");
  verify->add_option("--emit", emit)->check(CLI::IsMember({"jsonl", "summary"}));
  verify->add_option("--seed-cycle", seed)->check(CLI::IsMember({"shortest", "longest"}));
  verify->add_flag("--engine-all", engine_all, "run the engine on rejected graphs too");

  std::string which = "all";
  auto* invariants = app.add_subcommand("invariants", "exact invariants per graph as JSONL");
  invariants->add_option("input", input, "graph6 file (default stdin)");
  invariants->add_option("--which", which, "comma list: toughness,connectivity,independence,freeness,hamiltonicity,all");
  invariants->add_option("--k", k)->check(CLI::PositiveNumber);
  invariants->add_flag("--strict", strict);

  std::string graph6;
  std::string file;
  std::string t_text = "1";
  auto* trace = app.add_subcommand("trace", "move-by-move engine trace for one graph");
  auto* g6_opt = trace->add_option("--graph6", graph6, "graph6 string");
  auto* file_opt = trace->add_option("--file", file, "graph6 or edge-list file");
  g6_opt->excludes(file_opt);
  trace->add_option("--k", k)->check(CLI::PositiveNumber);
  trace->add_option("--mode", mode)->check(CLI::IsMember({"theorem5", "theorem6"}));
  trace->add_option("--seed-cycle", seed)->check(CLI::IsMember({"shortest", "longest"}));
  trace->add_option("--t", t_text, "toughness threshold as num/den");

  int cross_max_n = 12;
  auto* crosscheck = app.add_subcommand("crosscheck", "assert invariant identities and oracle equivalences");
  crosscheck->add_option("input", input, "graph6 file (default stdin)");
  crosscheck->add_option("--max-n", cross_max_n);
  crosscheck->add_flag("--strict", strict);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*verify) {
      VerifyOptions options;
      options.filter = HypothesisFilter{k, parse_preset(mode), 3};
      options.workers = workers;
      options.strict = strict;
      options.max_n = max_n;
      options.seed = parse_seed(seed);
      options.engine_all = engine_all;
      return cmd_verify(input, options, emit);
    }
    if (*invariants) return cmd_invariants(input, which, k, strict);
    if (*trace) {
      if (graph6.empty() && file.empty()) throw InputError("trace needs --graph6 or --file");
      return cmd_trace(graph6, file, k, mode, seed, t_text);
    }
    if (*crosscheck) return cmd_crosscheck(input, cross_max_n, strict);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
