#pragma once

// Learning a partial-updates threshold policy from samples of the scenario
// distribution.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pandora/model.hpp"
#include "pandora/solver.hpp"

namespace pandora {

struct LearningConfig {
  std::size_t sample_count = 100;
  double epsilon = 0.25;
  double delta = 0.1;
  /// Constant C in repeats = ceil(C log(1/delta) / epsilon).
  double repeat_constant = 1.0;
  /// Overrides the formula above when set.
  std::optional<std::size_t> repeat_override;
  std::uint64_t seed = 0;

  std::size_t repeat_count() const;
  /// Throws Error on m = 0, epsilon <= 0, or delta outside (0, 1).
  void check() const;
};

struct LearningReport {
  ThresholdPolicy policy;  // clipped and padded
  std::size_t repeats = 0;
  std::size_t selected_repeat = 0;
  /// Empirical E[min_b v_b] of every repeat, in repeat order.
  std::vector<double> repeat_min_values;
  /// Learned policy's expected cost on the selected sample.
  double empirical_cost = 0.0;
  CostBreakdown true_cost;
  /// Scenario-aware optimum on the source; empty above the brute-force limit.
  std::optional<double> sa_opt;
  std::vector<BoxId> sa_permutation;
  std::optional<double> ratio;
  /// Non-empty when opening costs are too spread out for sampling to be
  /// reliable.
  std::string cost_warning;
};

/// m i.i.d. draws by weight, each kept as a separate unit-weight scenario.
/// Deterministic in `seed`. Throws Error when m = 0.
Instance sample_empirical(const Instance& source, std::size_t m, std::uint64_t seed);

/// Seed used by repeat `index` of a learning run seeded with `seed`.
std::uint64_t repeat_seed(std::uint64_t seed, std::size_t index);

/// tau'_b = min(tau_b, n / epsilon).
ThresholdPolicy clip_thresholds(const ThresholdPolicy& policy, std::size_t box_count,
                                double epsilon);

/// Appends every box missing from the policy, in index order, with
/// `threshold`: they are reached only when the learned prefix never stopped.
ThresholdPolicy pad_policy(const ThresholdPolicy& policy, std::size_t box_count,
                           double threshold);

/// E[min_b v_b] under the instance's weights.
double expected_min_value(const Instance& instance);

/// Empty when max/min opening cost <= n^3, otherwise a human-readable
/// warning.
std::string cost_spread_warning(const Instance& instance);

LearningReport learn(const Instance& source, const LearningConfig& config);

struct SweepRow {
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
  double empirical_cost = 0.0;
  double true_cost = 0.0;
  double ratio = 0.0;
};

/// One learn() per (m, seed) pair, m-major.
std::vector<SweepRow> learning_sweep(const Instance& source, LearningConfig config,
                                     const std::vector<std::size_t>& sample_counts,
                                     const std::vector<std::uint64_t>& seeds);

}  // namespace pandora
