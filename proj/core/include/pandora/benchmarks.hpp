#pragma once

// Exact reference points for small instances: scenario-aware permutation
// policies, their brute-force optimum, the min-sum-set-cover greedy, and
// product (independent) instances.

#include <utility>
#include <vector>

#include "pandora/model.hpp"

namespace pandora {

/// Expected cost of the scenario-aware policy that opens boxes in
/// `permutation` order and stops at the best prefix for each scenario.
/// A scenario with no finite value among the listed boxes contributes +inf.
double sa_cost(const std::vector<BoxId>& permutation, const Instance& instance);

struct PermutationOptimum {
  double cost = kInfinity;
  std::vector<BoxId> permutation;
};

inline constexpr std::size_t kDefaultMaxBruteForceBoxes = 9;

/// Minimum of sa_cost over all n! permutations. Ties go to the
/// lexicographically smallest permutation. Throws Error when n > max_boxes.
PermutationOptimum pa_opt_bruteforce(const Instance& instance,
                                     std::size_t max_boxes = kDefaultMaxBruteForceBoxes);

/// Unit costs and values in {0, +inf}.
bool is_mssc_instance(const Instance& instance);

struct MsscResult {
  std::vector<BoxId> order;
  /// 1-based step at which each scenario is first covered.
  std::vector<std::size_t> cover_step;
  double expected_cover_time = 0.0;
};

/// Greedy min-sum set cover: pick the box whose zeros cover the most
/// surviving weight, lowest index on ties. Throws Error on non-MSSC input.
MsscResult mssc_greedy(const Instance& instance);

struct SupportPoint {
  double value = 0.0;
  double probability = 0.0;
};

inline constexpr std::size_t kMaxProductScenarios = 100000;

/// Cross product of independent per-box supports. Throws Error on an empty
/// support, probabilities not summing to one, or more than
/// kMaxProductScenarios scenarios.
Instance product_instance(const std::vector<std::vector<SupportPoint>>& supports,
                          std::vector<double> costs);

inline constexpr double kPartialUpdatesBound = 4.428;
inline constexpr double kFullUpdatesBound = 5.8285;  // 3 + 2 sqrt(2), rounded up

struct BenchmarkReport {
  double alg_cost = 0.0;
  double alg_full_cost = 0.0;
  double sa_opt = 0.0;
  double ratio_partial = 0.0;
  double ratio_full = 0.0;
  std::vector<BoxId> best_permutation;

  bool within_bounds(double slack = 1e-6) const {
    return ratio_partial <= kPartialUpdatesBound + slack &&
           ratio_full <= kFullUpdatesBound + slack;
  }
};

BenchmarkReport benchmark_report(const Instance& instance,
                                 std::size_t max_boxes = kDefaultMaxBruteForceBoxes);

}  // namespace pandora
