#include "pandora/model.hpp"

#include <algorithm>
#include <numeric>

namespace pandora {

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
  std::string out = "invalid instance";
  for (const auto& v : violations) {
    out += "; ";
    out += v;
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

double Instance::total_weight() const {
  double total = 0.0;
  for (const auto& s : scenarios) total += s.weight;
  return total;
}

double Instance::weight_of(std::span<const ScenarioId> subset) const {
  double total = 0.0;
  for (ScenarioId s : subset) total += scenarios[s].weight;
  return total;
}

std::vector<std::string> validate(const Instance& instance) {
  std::vector<std::string> out;
  const std::size_t n = instance.box_count();
  if (n == 0) out.emplace_back("instance has no boxes");
  if (instance.scenario_count() == 0) out.emplace_back("instance has no scenarios");

  for (BoxId b = 0; b < n; ++b) {
    const double c = instance.costs[b];
    if (std::isnan(c) || c < 0.0) {
      out.push_back("negative cost box " + std::to_string(b));
    } else if (!is_finite(c)) {
      out.push_back("infinite cost box " + std::to_string(b));
    }
  }

  for (ScenarioId s = 0; s < instance.scenario_count(); ++s) {
    const Scenario& sc = instance.scenarios[s];
    const std::string tag = "scenario " + std::to_string(s);
    if (!(sc.weight > 0.0) || !is_finite(sc.weight)) {
      out.push_back(tag + " has non-positive weight");
    }
    if (sc.values.size() != n) {
      out.push_back(tag + " has " + std::to_string(sc.values.size()) +
                    " values, expected " + std::to_string(n));
      continue;
    }
    bool any_finite = false;
    for (BoxId b = 0; b < n; ++b) {
      const double v = sc.values[b];
      if (std::isnan(v) || v < 0.0) {
        out.push_back(tag + " has negative value at box " + std::to_string(b));
      } else if (is_finite(v)) {
        any_finite = true;
      }
    }
    if (!any_finite && n > 0) out.push_back(tag + " has no finite value");
  }
  return out;
}

void require_valid(const Instance& instance) {
  auto violations = validate(instance);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

Instance normalize(const Instance& instance) {
  const double total = instance.total_weight();
  if (!(total > 0.0)) throw Error("cannot normalize: total weight is zero");
  Instance out = instance;
  for (auto& s : out.scenarios) s.weight /= total;
  return out;
}

ResidualState ResidualState::initial(const Instance& instance) {
  ResidualState state;
  state.alive.resize(instance.scenario_count());
  std::iota(state.alive.begin(), state.alive.end(), ScenarioId{0});
  state.residual_costs = instance.costs;
  state.opened.assign(instance.box_count(), false);
  return state;
}

void ResidualState::open(BoxId box) {
  residual_costs[box] = 0.0;
  opened[box] = true;
}

void ResidualState::remove(std::span<const ScenarioId> covered) {
  std::vector<ScenarioId> rest;
  rest.reserve(alive.size());
  std::set_difference(alive.begin(), alive.end(), covered.begin(), covered.end(),
                      std::back_inserter(rest));
  alive = std::move(rest);
}

bool ResidualState::consistent(const Instance& instance) const {
  if (residual_costs.size() != instance.box_count() ||
      opened.size() != instance.box_count()) {
    return false;
  }
  for (BoxId b = 0; b < instance.box_count(); ++b) {
    if (opened[b] ? residual_costs[b] != 0.0
                  : residual_costs[b] != instance.costs[b]) {
      return false;
    }
  }
  for (std::size_t i = 0; i < alive.size(); ++i) {
    if (alive[i] >= instance.scenario_count()) return false;
    if (i > 0 && alive[i - 1] >= alive[i]) return false;
  }
  return true;
}

std::map<ScenarioId, double> conditional_weight(const ResidualState& state,
                                                const Instance& instance) {
  if (state.alive.empty()) throw Error("no surviving scenarios");
  const double total = instance.weight_of(state.alive);
  std::map<ScenarioId, double> out;
  for (ScenarioId s : state.alive) out.emplace(s, instance.weight(s) / total);
  return out;
}

}  // namespace pandora
