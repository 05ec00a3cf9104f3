#include "pandora/solver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pandora {

namespace {

CostBreakdown weighted_average(const Instance& instance, const std::vector<double>& opening,
                               const std::vector<double>& value) {
  CostBreakdown out;
  const double total = instance.total_weight();
  for (ScenarioId s = 0; s < instance.scenario_count(); ++s) {
    out.opening += instance.weight(s) * opening[s];
    out.value += instance.weight(s) * value[s];
  }
  out.opening /= total;
  out.value /= total;
  return out;
}

std::size_t step_cap(const Instance& instance) {
  return instance.box_count() + instance.scenario_count();
}

}  // namespace

bool ThresholdPolicy::well_formed(std::size_t box_count) const {
  if (order.size() != thresholds.size()) return false;
  std::set<BoxId> seen;
  for (BoxId b : order) {
    if (b >= box_count || !seen.insert(b).second) return false;
  }
  return std::all_of(thresholds.begin(), thresholds.end(),
                     [](double t) { return is_finite(t) && t >= 0.0; });
}

PartialResult run_partial(const Instance& instance, const StepObserver& observer) {
  require_valid(instance);
  const std::size_t m = instance.scenario_count();

  PartialResult result;
  std::vector<double> opening(m, 0.0);
  std::vector<double> value(m, kInfinity);
  ResidualState state = ResidualState::initial(instance);

  while (!state.empty()) {
    if (result.trace.size() >= step_cap(instance)) {
      throw Error("partial updates exceeded " + std::to_string(step_cap(instance)) +
                  " steps");
    }
    ReservationResult pick = argmin_sigma(state, instance);

    TraceStep step;
    step.step = result.trace.size();
    step.box = pick.box;
    step.sigma = pick.sigma;
    step.covered = std::move(pick.covered);
    step.alive_before = state.alive;
    step.paid_cost = state.residual_costs[step.box];
    if (observer) observer(state, step);

    for (ScenarioId s : state.alive) opening[s] += step.paid_cost;
    for (ScenarioId s : step.covered) value[s] = instance.value(s, step.box);

    if (!state.opened[step.box]) {
      result.policy.order.push_back(step.box);
      result.policy.thresholds.push_back(step.sigma);
    }
    state.open(step.box);
    state.remove(step.covered);
    result.trace.push_back(std::move(step));
  }

  result.cost = weighted_average(instance, opening, value);
  return result;
}

FullResult run_full(const Instance& instance) {
  require_valid(instance);
  const std::size_t m = instance.scenario_count();

  FullResult result;
  std::vector<double> opening(m, 0.0);
  std::vector<double> value(m, kInfinity);

  struct Pending {
    std::size_t node;
    ResidualState state;
    std::size_t depth;
  };

  result.tree.nodes.emplace_back();
  result.tree.nodes[0].scenarios = ResidualState::initial(instance).alive;
  std::vector<Pending> stack;
  stack.push_back({0, ResidualState::initial(instance), 0});

  while (!stack.empty()) {
    Pending current = std::move(stack.back());
    stack.pop_back();
    if (current.depth >= step_cap(instance)) {
      throw Error("full updates exceeded " + std::to_string(step_cap(instance)) +
                  " steps on one path");
    }

    ReservationResult pick = argmin_sigma(current.state, instance);
    const BoxId box = pick.box;
    const double paid = current.state.residual_costs[box];
    for (ScenarioId s : current.state.alive) opening[s] += paid;
    for (ScenarioId s : pick.covered) value[s] = instance.value(s, box);

    // Survivors grouped by what they reveal at the opened box.
    std::map<double, std::vector<ScenarioId>> branches;
    std::vector<ScenarioId> survivors;
    std::set_difference(current.state.alive.begin(), current.state.alive.end(),
                        pick.covered.begin(), pick.covered.end(),
                        std::back_inserter(survivors));
    for (ScenarioId s : survivors) branches[instance.value(s, box)].push_back(s);

    {
      PolicyNode& node = result.tree.nodes[current.node];
      node.box = box;
      node.sigma = pick.sigma;
      node.covered = std::move(pick.covered);
      node.paid_cost = paid;
    }

    for (auto& [observed, members] : branches) {
      const std::size_t child = result.tree.nodes.size();
      result.tree.nodes.emplace_back();
      result.tree.nodes[child].scenarios = members;
      result.tree.nodes[current.node].children.emplace_back(observed, child);

      ResidualState next = current.state;
      next.open(box);
      next.alive = std::move(members);
      stack.push_back({child, std::move(next), current.depth + 1});
    }
  }

  result.cost = weighted_average(instance, opening, value);
  return result;
}

Outcome simulate_threshold_policy(const ThresholdPolicy& policy, const Scenario& scenario,
                                  const Instance& instance) {
  Outcome out;
  for (std::size_t i = 0; i < policy.order.size(); ++i) {
    if (!(out.value > policy.thresholds[i] + kTolerance)) break;
    const BoxId b = policy.order[i];
    out.opening += instance.costs[b];
    out.value = std::min(out.value, scenario.values[b]);
  }
  return out;
}

CostBreakdown expected_policy_cost(const ThresholdPolicy& policy, const Instance& instance) {
  const std::size_t m = instance.scenario_count();
  std::vector<double> opening(m);
  std::vector<double> value(m);
  for (ScenarioId s = 0; s < m; ++s) {
    const Outcome o = simulate_threshold_policy(policy, instance.scenarios[s], instance);
    opening[s] = o.opening;
    value[s] = o.value;
  }
  return weighted_average(instance, opening, value);
}

}  // namespace pandora
