#include "pandora/json_io.hpp"

#include <charconv>
#include <fstream>

namespace pandora {

namespace {

const Json& require_key(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing key '") + key + "'");
  }
  return j.at(key);
}

Json indices(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t i : v) out.push_back(i);
  return out;
}

Json optional_number(const std::optional<double>& v) {
  return v ? value_to_json(*v) : Json(nullptr);
}

Json policy_subtree(const PolicyTree& tree, std::size_t u) {
  const PolicyNode& node = tree.nodes[u];
  Json out;
  out["box"] = node.box;
  out["sigma"] = value_to_json(node.sigma);
  out["covered"] = indices(node.covered);
  out["scenarios"] = indices(node.scenarios);
  out["paid_cost"] = node.paid_cost;
  Json children = Json::object();
  for (const auto& [value, child] : node.children) {
    children[value_key(value)] = policy_subtree(tree, child);
  }
  out["children"] = std::move(children);
  return out;
}

void weighted_subtree(const Json& j, WeightedTree& tree) {
  const std::size_t u = tree.nodes.size();
  tree.nodes.emplace_back();
  const Json& weights = require_key(j, "weights");
  if (!weights.is_array()) throw ParseError("'weights' must be an array");
  for (const auto& w : weights) tree.nodes[u].weights.push_back(value_from_json(w));
  if (!j.contains("children")) return;
  const Json& children = j.at("children");
  if (!children.is_array()) throw ParseError("'children' must be an array");
  for (const auto& child : children) {
    tree.nodes[u].children.push_back(tree.nodes.size());
    weighted_subtree(child, tree);
  }
}

Json weighted_subtree_json(const WeightedTree& tree, std::size_t u) {
  Json out;
  out["weights"] = tree.nodes[u].weights;
  Json children = Json::array();
  for (std::size_t c : tree.nodes[u].children) children.push_back(weighted_subtree_json(tree, c));
  out["children"] = std::move(children);
  return out;
}

}  // namespace

Json value_to_json(double v) {
  if (!is_finite(v) && v > 0) return "inf";
  return v;
}

double value_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string() && j.get<std::string>() == "inf") return kInfinity;
  throw ParseError("expected a number or \"inf\", got " + j.dump());
}

std::string value_key(double v) {
  if (!is_finite(v)) return "inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

Instance instance_from_json(const Json& j) {
  Instance out;
  const Json& costs = require_key(j, "costs");
  if (!costs.is_array()) throw ParseError("'costs' must be an array");
  for (const auto& c : costs) out.costs.push_back(value_from_json(c));

  const Json& scenarios = require_key(j, "scenarios");
  if (!scenarios.is_array()) throw ParseError("'scenarios' must be an array");
  for (const auto& s : scenarios) {
    Scenario sc;
    const Json& weight = require_key(s, "weight");
    if (!weight.is_number()) throw ParseError("scenario weight must be a number");
    sc.weight = weight.get<double>();
    const Json& values = require_key(s, "values");
    if (!values.is_array()) throw ParseError("scenario 'values' must be an array");
    for (const auto& v : values) sc.values.push_back(value_from_json(v));
    out.scenarios.push_back(std::move(sc));
  }
  return out;
}

Json instance_to_json(const Instance& instance) {
  Json out;
  Json costs = Json::array();
  for (double c : instance.costs) costs.push_back(value_to_json(c));
  out["costs"] = std::move(costs);
  Json scenarios = Json::array();
  for (const auto& s : instance.scenarios) {
    Json sj;
    sj["weight"] = s.weight;
    Json values = Json::array();
    for (double v : s.values) values.push_back(value_to_json(v));
    sj["values"] = std::move(values);
    scenarios.push_back(std::move(sj));
  }
  out["scenarios"] = std::move(scenarios);
  return out;
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Instance read_instance(const std::filesystem::path& path) {
  return instance_from_json(read_json(path));
}

Json to_json(const CostBreakdown& cost) {
  Json out;
  out["opening"] = value_to_json(cost.opening);
  out["value"] = value_to_json(cost.value);
  out["total"] = value_to_json(cost.total());
  return out;
}

Json to_json(const TraceStep& step) {
  Json out;
  out["step"] = step.step;
  out["box"] = step.box;
  out["sigma"] = value_to_json(step.sigma);
  out["covered"] = indices(step.covered);
  out["alive_before"] = indices(step.alive_before);
  out["paid_cost"] = step.paid_cost;
  return out;
}

Json to_json(const ThresholdPolicy& policy) {
  Json out;
  out["permutation"] = indices(policy.order);
  out["thresholds"] = policy.thresholds;
  return out;
}

Json to_json(const PolicyTree& tree) {
  if (tree.nodes.empty()) return nullptr;
  return policy_subtree(tree, 0);
}

Json to_json(const BenchmarkReport& report) {
  Json out;
  out["alg_cost"] = value_to_json(report.alg_cost);
  out["alg_full_cost"] = value_to_json(report.alg_full_cost);
  out["sa_opt"] = value_to_json(report.sa_opt);
  out["ratio_partial"] = value_to_json(report.ratio_partial);
  out["ratio_full"] = value_to_json(report.ratio_full);
  out["bound_partial"] = kPartialUpdatesBound;
  out["bound_full"] = kFullUpdatesBound;
  out["within_bounds"] = report.within_bounds();
  out["best_permutation"] = indices(report.best_permutation);
  return out;
}

Json to_json(const LearningReport& report) {
  Json out;
  out["policy"] = to_json(report.policy);
  out["repeats"] = report.repeats;
  out["selected_repeat"] = report.selected_repeat;
  Json mins = Json::array();
  for (double v : report.repeat_min_values) mins.push_back(value_to_json(v));
  out["repeat_min_values"] = std::move(mins);
  out["empirical_cost"] = value_to_json(report.empirical_cost);
  out["true_cost"] = to_json(report.true_cost);
  out["sa_opt"] = optional_number(report.sa_opt);
  out["sa_permutation"] = indices(report.sa_permutation);
  out["ratio"] = optional_number(report.ratio);
  if (!report.cost_warning.empty()) out["cost_warning"] = report.cost_warning;
  return out;
}

Json to_json(const LemmaCheck& check) {
  Json out;
  out["lhs"] = check.lhs;
  out["mid"] = check.mid;
  out["rhs"] = check.rhs;
  out["holds"] = check.holds;
  return out;
}

Json to_json(const WeightedTree& tree) {
  if (tree.nodes.empty()) return nullptr;
  return weighted_subtree_json(tree, 0);
}

WeightedTree weighted_tree_from_json(const Json& j) {
  WeightedTree tree;
  weighted_subtree(j, tree);
  return tree;
}

}  // namespace pandora
