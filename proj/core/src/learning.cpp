#include "pandora/learning.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pandora/benchmarks.hpp"

namespace pandora {

std::size_t LearningConfig::repeat_count() const {
  if (repeat_override) return std::max<std::size_t>(1, *repeat_override);
  const double r = std::ceil(repeat_constant * std::log(1.0 / delta) / epsilon);
  return std::max<std::size_t>(1, static_cast<std::size_t>(r));
}

void LearningConfig::check() const {
  if (sample_count == 0) throw Error("sample count must be at least 1");
  if (!(epsilon > 0.0)) throw Error("epsilon must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw Error("delta must lie in (0, 1)");
  if (!(repeat_constant > 0.0)) throw Error("repeat constant must be positive");
}

Instance sample_empirical(const Instance& source, std::size_t m, std::uint64_t seed) {
  if (m == 0) throw Error("sample count must be at least 1");
  std::vector<double> weights;
  weights.reserve(source.scenario_count());
  for (const auto& s : source.scenarios) weights.push_back(s.weight);

  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());

  Instance out;
  out.costs = source.costs;
  out.scenarios.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Scenario s = source.scenarios[pick(rng)];
    s.weight = 1.0;
    out.scenarios.push_back(std::move(s));
  }
  return out;
}

std::uint64_t repeat_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 of (seed, index)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ThresholdPolicy clip_thresholds(const ThresholdPolicy& policy, std::size_t box_count,
                                double epsilon) {
  const double cap = static_cast<double>(box_count) / epsilon;
  ThresholdPolicy out = policy;
  for (double& t : out.thresholds) t = std::min(t, cap);
  return out;
}

ThresholdPolicy pad_policy(const ThresholdPolicy& policy, std::size_t box_count,
                           double threshold) {
  ThresholdPolicy out = policy;
  std::vector<bool> listed(box_count, false);
  for (BoxId b : policy.order) listed[b] = true;
  for (BoxId b = 0; b < box_count; ++b) {
    if (listed[b]) continue;
    out.order.push_back(b);
    out.thresholds.push_back(threshold);
  }
  return out;
}

double expected_min_value(const Instance& instance) {
  double total = 0.0;
  for (const auto& s : instance.scenarios) {
    total += s.weight * *std::min_element(s.values.begin(), s.values.end());
  }
  return total / instance.total_weight();
}

std::string cost_spread_warning(const Instance& instance) {
  if (instance.costs.empty()) return {};
  const auto [lo, hi] = std::minmax_element(instance.costs.begin(), instance.costs.end());
  const double n = static_cast<double>(instance.box_count());
  if (*hi <= *lo * n * n * n) return {};
  return "opening costs range from " + std::to_string(*lo) + " to " + std::to_string(*hi) +
         " (ratio above n^3); sampled policies may miss rare expensive scenarios";
}

LearningReport learn(const Instance& source, const LearningConfig& config) {
  config.check();
  require_valid(source);
  const std::size_t n = source.box_count();

  LearningReport report;
  report.cost_warning = cost_spread_warning(source);
  report.repeats = config.repeat_count();

  Instance selected;
  for (std::size_t r = 0; r < report.repeats; ++r) {
    Instance sample =
        sample_empirical(source, config.sample_count, repeat_seed(config.seed, r));
    const double stat = expected_min_value(sample);
    report.repeat_min_values.push_back(stat);
    if (r == 0 || stat < report.repeat_min_values[report.selected_repeat]) {
      report.selected_repeat = r;
      selected = std::move(sample);
    }
  }

  const double cap = static_cast<double>(n) / config.epsilon;
  const PartialResult on_sample = run_partial(selected);
  report.policy = pad_policy(clip_thresholds(on_sample.policy, n, config.epsilon), n, cap);
  report.empirical_cost = expected_policy_cost(report.policy, selected).total();
  report.true_cost = expected_policy_cost(report.policy, source);

  if (n <= kDefaultMaxBruteForceBoxes) {
    const PermutationOptimum opt = pa_opt_bruteforce(source);
    report.sa_opt = opt.cost;
    report.sa_permutation = opt.permutation;
    const double total = report.true_cost.total();
    report.ratio = opt.cost > 0.0 ? total / opt.cost : (total > 0.0 ? kInfinity : 1.0);
  }
  return report;
}

std::vector<SweepRow> learning_sweep(const Instance& source, LearningConfig config,
                                     const std::vector<std::size_t>& sample_counts,
                                     const std::vector<std::uint64_t>& seeds) {
  std::vector<SweepRow> rows;
  rows.reserve(sample_counts.size() * seeds.size());
  for (std::size_t m : sample_counts) {
    for (std::uint64_t seed : seeds) {
      config.sample_count = m;
      config.seed = seed;
      const LearningReport report = learn(source, config);
      rows.push_back({m, seed, report.empirical_cost, report.true_cost.total(),
                      report.ratio.value_or(std::nan(""))});
    }
  }
  return rows;
}

}  // namespace pandora
