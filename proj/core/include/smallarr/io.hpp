#pragma once

#include <string>

#include <json.hpp>

#include "smallarr/arrangement.hpp"
#include "smallarr/chordal.hpp"
#include "smallarr/ideals.hpp"

namespace smallarr {

using Json = nlohmann::json;

/// Arrangement document:
/// { "ambient_rank": <int >= 1>,
///   "subspaces": [ { "name": <string>, "basis": [[<int or "p/q">, ...], ...] }, ... ] }
/// Unknown keys (e.g. "description") are ignored. Throws input_error on
/// schema violations, reporting the offending component where possible.
Arrangement arrangement_from_json(const Json& doc);
Arrangement load_arrangement(const std::string& text);
Arrangement load_arrangement_file(const std::string& path);

Json arrangement_to_json(const Arrangement& arr);

/// Graph document: { "n": <int>, "edges": [[u, v], ...] }.
SimpleGraph graph_from_json(const Json& doc);
SimpleGraph load_graph(const std::string& text);
SimpleGraph load_graph_file(const std::string& path);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& value);

Json smallness_report_to_json(const SmallnessReport& report);
Json verify_result_to_json(const VerifyResult& result);
Json direct_sum_report_to_json(const DirectSumReport& report);
Json projection_result_to_json(const ProjectionResult& result);
Json small_char_report_to_json(const SmallCharReport& report);
Json generator_set_to_json(const GeneratorSet& gens);
Json generation_report_to_json(const GenerationReport& report);
Json chordality_report_to_json(const ChordalityReport& report);
Json froberg_report_to_json(const FrobergReport& report);

}  // namespace smallarr
