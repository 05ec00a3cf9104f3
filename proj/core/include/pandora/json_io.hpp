#pragma once

// JSON encodings. Infinity is always written as the string "inf"; objects
// keep insertion order so emitted files are stable byte for byte.

#include <filesystem>
#include <nlohmann/json.hpp>

#include "pandora/benchmarks.hpp"
#include "pandora/learning.hpp"
#include "pandora/model.hpp"
#include "pandora/solver.hpp"
#include "pandora/tree_analysis.hpp"

namespace pandora {

using Json = nlohmann::ordered_json;

/// Malformed document (as opposed to a well-formed but invalid instance).
class ParseError : public Error {
 public:
  using Error::Error;
};

Json value_to_json(double v);
/// Accepts a number or the string "inf". Throws ParseError otherwise.
double value_from_json(const Json& j);

/// {"costs": [...], "scenarios": [{"weight": w, "values": [...]}, ...]}.
/// Extra keys (such as an embedded manifest) are ignored. The result is not
/// validated.
Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& instance);

Instance read_instance(const std::filesystem::path& path);
Json read_json(const std::filesystem::path& path);

Json to_json(const CostBreakdown& cost);
Json to_json(const TraceStep& step);
Json to_json(const ThresholdPolicy& policy);
/// Nested {"box", "sigma", "covered", "paid_cost", "scenarios",
/// "children": {value: subtree}} with children in ascending value order.
Json to_json(const PolicyTree& tree);
Json to_json(const BenchmarkReport& report);
Json to_json(const LearningReport& report);
Json to_json(const LemmaCheck& check);

/// {"weights": [...], "children": [...]}
Json to_json(const WeightedTree& tree);
WeightedTree weighted_tree_from_json(const Json& j);

/// Key used for a policy-tree child: shortest decimal form, or "inf".
std::string value_key(double v);

}  // namespace pandora
