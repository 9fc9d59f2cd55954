#pragma once

#include <json.hpp>
#include <string_view>

#include "hamtough/engine.hpp"
#include "hamtough/verify.hpp"

namespace hamtough {

using Json = nlohmann::ordered_json;

Json to_json(VertexSet s);
Json to_json(const FreenessWitness& w);
Json to_json(const Certificate& cert);

/// {"graph6", "k", "mode", "seed", "steps": [{"kind","params","len_after","rule"}], "outcome", "fallbacks"}
Json trace_to_json(const EngineTrace& trace, std::string_view graph6, int k, EngineMode mode, Rational t);

Json record_to_json(const GraphRecord& record);
Json summary_to_json(const Report& report, const HypothesisFilter& filter);

Json invariants_to_json(const Graph& g, std::string_view graph6, const InvariantSelection& which);

}  // namespace hamtough
