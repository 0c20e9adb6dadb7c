#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "blochinterp/functions.hpp"
#include "blochinterp/interpolation.hpp"
#include "blochinterp/sequences.hpp"

namespace blochinterp {

using Json = nlohmann::json;

// Sequence files: {"label": ..., "points": [{"re": ..., "im": ...}, ...]}.
Json to_json(const PointSequence& seq);
PointSequence sequence_from_json(const Json& j);

// Target files: [[re, im], ...]. Bare numbers are accepted as real targets.
Json to_json(const std::vector<Complex>& targets);
std::vector<Complex> targets_from_json(const Json& j);

Json to_json(const SeparationReport& report);
Json to_json(const HaymanReport& report);
Json to_json(const BlochNormReport& report);
Json to_json(const PrimitiveBoundReport& report);
Json to_json(const ResidualReport& report);

// Construction tree, one object per node with a "kind" discriminator.
// Reloading rebuilds caches (Beurling denominators, kernel weights) through
// the original constructors, so a round-tripped function evaluates
// bit-identically.
Json to_json(const AnalyticFunction& f);
AnalyticFunction function_from_json(const Json& j);

// Problem files: {"sequence": <sequence object>, "targets": <target list>,
// "space": "bloch" | "hinf"}.
Json to_json(const InterpolationProblem& problem);
InterpolationProblem problem_from_json(const Json& j);

std::string space_name(Space space);
Space space_from_name(const std::string& name);

Json load_json_file(const std::filesystem::path& path);
void save_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace blochinterp
