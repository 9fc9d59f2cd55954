#include "hamtough/json_io.hpp"

namespace hamtough {

Json to_json(VertexSet s) { return Json(s.to_vector()); }

Json to_json(const FreenessWitness& w) {
  return Json{{"edge", {w.edge.u, w.edge.v}}, {"singles", to_json(w.singles)}};
}

Json to_json(const Certificate& cert) {
  Json out{{"type", certificate_kind(cert)}};
  if (const auto* ham = std::get_if<HamiltonianCert>(&cert)) {
    out["cycle"] = ham->order;
  } else if (const auto* tc = std::get_if<ToughCutCert>(&cert)) {
    out["S"] = to_json(tc->cut);
    out["comps"] = tc->components;
    out["ratio"] = tc->ratio.to_string();
  } else if (const auto* vc = std::get_if<VertexCutCert>(&cert)) {
    out["S"] = to_json(vc->cut);
    out["size"] = vc->cut.size();
    out["required"] = vc->required;
  } else {
    const auto& ind = std::get<InducedCert>(cert);
    out["k"] = ind.k;
    out["witness"] = to_json(ind.witness);
  }
  return out;
}

Json trace_to_json(const EngineTrace& trace, std::string_view graph6, int k, EngineMode mode, Rational t) {
  Json steps = Json::array();
  for (const Move& m : trace.steps)
    steps.push_back({{"kind", to_string(m.kind)},
                     {"params", m.params},
                     {"len_after", m.result.size()},
                     {"rule", m.rule()}});
  Json outcome;
  if (trace.outcome) {
    outcome = to_json(*trace.outcome);
    outcome["source"] = to_string(trace.source);
  } else {
    outcome = {{"type", "none"}, {"diagnostics", trace.diagnostics}};
  }
  return Json{{"graph6", graph6},
              {"k", k},
              {"mode", to_string(mode)},
              {"t", t.to_string()},
              {"required_connectivity", trace.required_connectivity},
              {"seed", trace.seed},
              {"steps", std::move(steps)},
              {"outcome", std::move(outcome)},
              {"fallbacks", trace.fallback_count}};
}

Json record_to_json(const GraphRecord& rec) {
  Json out{{"line", rec.line}, {"graph6", rec.graph6}, {"n", rec.n}};
  if (!rec.in_range) {
    out["skipped"] = "n exceeds max-n";
    return out;
  }
  if (rec.invariants) {
    const GraphInvariants& inv = *rec.invariants;
    out["toughness"] = inv.toughness.to_string();
    out["connectivity"] = inv.connectivity;
    out["independence"] = inv.independence;
    out["free"] = !inv.witness.has_value();
    out["witness"] = inv.witness ? to_json(*inv.witness) : Json();
  }
  out["filter"] = rec.passes_filter;
  out["hamiltonian"] = rec.hamiltonian ? Json(*rec.hamiltonian) : Json();
  if (rec.engine) {
    const EngineTrace& tr = *rec.engine;
    Json engine{{"outcome", tr.outcome ? Json(certificate_kind(*tr.outcome)) : Json("none")},
                {"source", to_string(tr.source)},
                {"valid", rec.certificate_valid},
                {"steps", tr.steps.size()},
                {"fallbacks", tr.fallback_count}};
    if (tr.outcome && !std::holds_alternative<HamiltonianCert>(*tr.outcome))
      engine["certificate"] = to_json(*tr.outcome);
    if (!tr.outcome) engine["diagnostics"] = tr.diagnostics;
    out["engine"] = std::move(engine);
  } else {
    out["engine"] = rec.engine_skipped.empty() ? Json() : Json{{"skipped", rec.engine_skipped}};
  }
  out["failed"] = rec.failed;
  return out;
}

Json summary_to_json(const Report& report, const HypothesisFilter& filter) {
  Json by_n = Json::object();
  for (const auto& [n, count] : report.filtered_by_n) by_n[std::to_string(n)] = count;
  return Json{{"mode", to_string(filter.mode)},
              {"k", filter.k},
              {"total", report.total},
              {"filtered", report.filtered},
              {"rejected", report.rejected},
              {"passed", report.passed},
              {"failed", report.failed},
              {"engine_runs", report.engine_runs},
              {"invalid_certificates", report.invalid_certificates},
              {"unresolved", report.unresolved},
              {"malformed", report.malformed.size()},
              {"filtered_by_n", std::move(by_n)},
              {"wall_ms", report.wall_ms}};
}

Json invariants_to_json(const Graph& g, std::string_view graph6, const InvariantSelection& which) {
  Json out{{"graph6", graph6}, {"n", g.order()}};
  if (which.toughness) out["toughness"] = toughness(g).to_string();
  if (which.connectivity) out["connectivity"] = vertex_connectivity(g);
  if (which.independence) out["independence"] = independence_number(g);
  if (which.freeness) {
    const auto w = find_induced_p2_kp1(g, which.k);
    out["k"] = which.k;
    out["free"] = !w.has_value();
    out["witness"] = w ? to_json(*w) : Json();
  }
  if (which.hamiltonicity) {
    const auto cycle = hamiltonian_cycle(g);
    out["hamiltonian"] = cycle.has_value();
  }
  return out;
}

}  // namespace hamtough
