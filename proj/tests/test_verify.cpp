#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "hamtough/graph_io.hpp"
#include "hamtough/json_io.hpp"
#include "hamtough/verify.hpp"

using namespace hamtough;

namespace {

std::vector<InputLine> lines_of(const std::string& text) {
  std::istringstream in(text);
  return read_lines(in);
}

std::vector<InputLine> corpus_n(int n) {
  std::vector<InputLine> out;
  std::size_t number = 0;
  for (const auto& line : fixtures::corpus_lines("graphs_n0-7.g6")) {
    ++number;
    const Graph g = parse_graph6(line);
    if (g.order() == n && is_connected(g)) out.push_back({number, line});
  }
  return out;
}

std::string jsonl(const Report& r) {
  std::string out;
  for (const auto& rec : r.records) out += record_to_json(rec).dump() + "\n";
  return out;
}

struct CliResult {
  int status;
  std::string out;
};

CliResult cli(const std::string& args, const std::string& input) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto in_path = dir / ("hamtough_cli_in_" + std::to_string(std::hash<std::string>{}(args + input)));
  std::ofstream(in_path) << input;
  const std::string cmd = std::string("\"") + HAMTOUGH_CLI + "\" " + args + " < \"" + in_path.string() + "\" 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  std::filesystem::remove(in_path);
  return {WEXITSTATUS(raw), out};
}

}  // namespace

TEST_CASE("presets and filters") {
  CHECK(parse_preset("chvatal_erdos") == Preset::kChvatalErdos);
  CHECK_THROWS(parse_preset("theorem7"));
  CHECK_THROWS(HypothesisFilter{2, Preset::kTheorem6}.check());
  CHECK_THROWS(HypothesisFilter{2, Preset::kCorollary7}.check());
  CHECK_NOTHROW(HypothesisFilter{1, Preset::kChvatalErdos}.check());
  CHECK(HypothesisFilter{3, Preset::kChvatalErdos}.engine_required_connectivity() == 3);
  CHECK(HypothesisFilter{1, Preset::kChvatalErdos}.engine_required_connectivity() == 2);
  CHECK(HypothesisFilter{3, Preset::kCorollary7}.engine_mode() == EngineMode::kTheorem6);

  const Graph p = fixtures::petersen();
  const auto inv = compute_invariants(p, 3);
  CHECK(inv.toughness == Rational(4, 3));
  CHECK(inv.connectivity == 3);
  CHECK(inv.independence == 4);
  CHECK_FALSE(passes({3, Preset::kTheorem6}, p, inv));
  CHECK(passes({3, Preset::kTheorem5}, fixtures::complete(7), compute_invariants(fixtures::complete(7), 3)));
}

TEST_CASE("empty stream gives an empty, passing report") {
  const Report r = run_verify(lines_of(""), {});
  CHECK(r.total == 0);
  CHECK(r.records.empty());
  CHECK(r.ok());
}

TEST_CASE("report records") {
  VerifyOptions opts;
  const Report r = run_verify(lines_of("C~\n\nIheA@GUAo\nbad\n"), opts);
  REQUIRE(r.records.size() == 2);
  CHECK(r.records[0].line == 1);
  CHECK(r.records[0].passes_filter);
  CHECK(r.records[0].hamiltonian == true);
  CHECK_FALSE(r.records[0].failed);
  CHECK(r.records[1].line == 3);
  CHECK_FALSE(r.records[1].passes_filter);
  CHECK_FALSE(r.records[1].engine);
  REQUIRE(r.malformed.size() == 1);
  CHECK(r.malformed[0].number == 4);

  opts.strict = true;
  CHECK_THROWS_AS(run_verify(lines_of("C~\nbad\n"), opts), InputError);
}

TEST_CASE("connected n=6 corpus under theorem5 k=1 and corollary7 k=3") {
  const auto lines = corpus_n(6);
  REQUIRE(lines.size() == 112);
  for (HypothesisFilter f : {HypothesisFilter{1, Preset::kTheorem5}, HypothesisFilter{3, Preset::kCorollary7}}) {
    VerifyOptions opts;
    opts.filter = f;
    opts.engine_all = true;
    const Report r = run_verify(lines, opts);
    CHECK(r.total == 112);
    CHECK(r.filtered + r.rejected == r.total);
    CHECK(r.filtered > 0);
    CHECK(r.failed == 0);
    CHECK(r.invalid_certificates == 0);
    CHECK(r.unresolved == 0);
    CHECK(r.ok());
  }
}

TEST_CASE("worker count does not change the JSONL") {
  const auto lines = corpus_n(7);
  VerifyOptions opts;
  opts.filter = {2, Preset::kTheorem5};
  opts.engine_all = true;
  const std::string serial = jsonl(run_verify(lines, opts));
  opts.workers = 4;
  CHECK(jsonl(run_verify(lines, opts)) == serial);
}

TEST_CASE("crosscheck identities hold on the n <= 6 corpus") {
  for (const auto& line : fixtures::corpus_lines("graphs_n0-7.g6")) {
    const Graph g = parse_graph6(line);
    if (g.order() > 6) break;
    const auto failure = crosscheck_graph(g);
    CHECK_MESSAGE(!failure, failure.value_or(""));
  }
  CHECK_FALSE(crosscheck_graph(fixtures::petersen()));
}

TEST_CASE("json output") {
  const Graph p = fixtures::petersen();
  const Json inv = invariants_to_json(p, to_graph6(p), InvariantSelection::all());
  CHECK(inv["toughness"] == "4/3");
  CHECK(inv["connectivity"] == 3);
  CHECK(inv["independence"] == 4);
  CHECK(inv["hamiltonian"] == false);

  const Graph k4 = fixtures::complete(4);
  CHECK(invariants_to_json(k4, "C~", InvariantSelection::all())["toughness"] == "inf");

  const Graph tri = fixtures::c6_plus({0, 2, 4});
  const auto trace = run(tri, 1, EngineMode::kTheorem5, Rational(1));
  const Json j = trace_to_json(trace, to_graph6(tri), 1, EngineMode::kTheorem5, Rational(1));
  CHECK(j["outcome"]["type"] == "ToughCut");
  CHECK(j["outcome"]["ratio"] == "3/4");
}

TEST_CASE("command line exit codes") {
  CHECK(cli("verify", "").status == 0);

  const auto ok = cli("verify --mode theorem5 --k 1", "C~\nD~{\n");
  CHECK(ok.status == 0);
  CHECK(std::count(ok.out.begin(), ok.out.end(), '\n') == 2);

  CHECK(cli("verify", "C~\nnot graph6\n").status == 0);
  CHECK(cli("verify --strict", "C~\nnot graph6\n").status == 2);
  CHECK(cli("verify --mode theorem6 --k 2", "C~\n").status == 2);
  CHECK(cli("verify --mode nonsense", "C~\n").status == 2);
  CHECK(cli("trace --graph6 IheA@GUAo --k 3 --mode theorem6", "").status == 0);
  CHECK(cli("trace --graph6 D?{ --k 1", "").status == 2);  // a star has no cycle

  const auto inv = cli("invariants", "EhEG\n");
  CHECK(inv.status == 0);
  CHECK(inv.out.find("\"toughness\":\"1/1\"") != std::string::npos);
  CHECK(inv.out.find("\"connectivity\":2") != std::string::npos);
  CHECK(inv.out.find("\"hamiltonian\":true") != std::string::npos);

  CHECK(cli("crosscheck --max-n 7", "IheA@GUAo\nEhEG\n").status == 0);
}

TEST_CASE("ok() reflects failures, invalid certificates and unresolved runs") {
  Report r;
  CHECK(r.ok());
  r.failed = 1;
  CHECK_FALSE(r.ok());
  r.failed = 0;
  r.invalid_certificates = 1;
  CHECK_FALSE(r.ok());
  r.invalid_certificates = 0;
  r.unresolved = 1;
  CHECK_FALSE(r.ok());
}
