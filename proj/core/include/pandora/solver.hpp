#pragma once

// Weitzman's rule generalized to correlated scenario distributions.
//
// Both variants repeatedly open the box with the smallest reservation value
// against the scenarios still consistent with what has been seen, stop for
// every scenario whose revealed value is at most that reservation value,
// and make the opened box free. They differ in how the prior is updated:
//   partial updates  condition only on "not stopped yet", so every surviving
//                    scenario follows the same opening order;
//   full updates     condition on the exact revealed value, so execution
//                    branches into a policy tree.

#include <functional>
#include <vector>

#include "pandora/model.hpp"
#include "pandora/reservation.hpp"

namespace pandora {

struct TraceStep {
  std::size_t step = 0;
  BoxId box = 0;
  double sigma = 0.0;
  std::vector<ScenarioId> covered;
  std::vector<ScenarioId> alive_before;
  /// Cost paid to open the box at this step; 0 when it was already open.
  double paid_cost = 0.0;
};

/// Open order[i] while the best value seen so far exceeds thresholds[i].
struct ThresholdPolicy {
  std::vector<BoxId> order;
  std::vector<double> thresholds;

  /// Distinct in-range boxes, matching lengths, finite non-negative
  /// thresholds.
  bool well_formed(std::size_t box_count) const;
};

struct PartialResult {
  std::vector<TraceStep> trace;
  ThresholdPolicy policy;
  CostBreakdown cost;
};

/// Called after every partial-updates step with the state the step was
/// taken from (before the step's box is opened or scenarios removed).
using StepObserver = std::function<void(const ResidualState& before, const TraceStep& step)>;

/// Partial updates. Each distinct box enters the policy once, at its first
/// opening, with its reservation value at that step as the threshold.
PartialResult run_partial(const Instance& instance, const StepObserver& observer = {});

struct PolicyNode {
  std::vector<ScenarioId> scenarios;
  BoxId box = 0;
  double sigma = 0.0;
  std::vector<ScenarioId> covered;
  double paid_cost = 0.0;
  /// (observed value, child node index), ascending by value.
  std::vector<std::pair<double, std::size_t>> children;
};

/// nodes[0] is the root; children always have larger indices than parents.
struct PolicyTree {
  std::vector<PolicyNode> nodes;
};

struct FullResult {
  PolicyTree tree;
  CostBreakdown cost;
};

/// Full updates. Residual costs are local to each root-to-leaf path.
FullResult run_full(const Instance& instance);

/// Realized opening cost and accepted value of one scenario.
struct Outcome {
  double opening = 0.0;
  double value = kInfinity;

  double total() const { return opening + value; }
};

/// Simulates the threshold policy on one scenario. Returns an infinite value
/// when the listed boxes hold nothing finite.
Outcome simulate_threshold_policy(const ThresholdPolicy& policy, const Scenario& scenario,
                                  const Instance& instance);

inline double evaluate_threshold_policy(const ThresholdPolicy& policy,
                                        const Scenario& scenario, const Instance& instance) {
  return simulate_threshold_policy(policy, scenario, instance).total();
}

/// Weight-averaged threshold-policy outcome over all scenarios.
CostBreakdown expected_policy_cost(const ThresholdPolicy& policy, const Instance& instance);

}  // namespace pandora
