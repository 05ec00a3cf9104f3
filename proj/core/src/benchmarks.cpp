#include "pandora/benchmarks.hpp"

#include <algorithm>
#include <numeric>

#include "pandora/solver.hpp"

namespace pandora {

namespace {

double scenario_aware_cost(const std::vector<BoxId>& permutation, const Scenario& scenario,
                           const Instance& instance) {
  double best = kInfinity;
  double paid = 0.0;
  double seen = kInfinity;
  for (BoxId b : permutation) {
    paid += instance.costs[b];
    seen = std::min(seen, scenario.values[b]);
    best = std::min(best, paid + seen);
  }
  return best;
}

double ratio(double alg, double opt) {
  if (opt > 0.0) return alg / opt;
  return alg > 0.0 ? kInfinity : 1.0;
}

}  // namespace

double sa_cost(const std::vector<BoxId>& permutation, const Instance& instance) {
  double total = 0.0;
  for (const Scenario& s : instance.scenarios) {
    total += s.weight * scenario_aware_cost(permutation, s, instance);
  }
  return total / instance.total_weight();
}

PermutationOptimum pa_opt_bruteforce(const Instance& instance, std::size_t max_boxes) {
  const std::size_t n = instance.box_count();
  if (n > max_boxes) {
    throw Error("brute force over " + std::to_string(n) + "! permutations refused (limit " +
                std::to_string(max_boxes) + " boxes); use a smaller instance");
  }
  std::vector<BoxId> perm(n);
  std::iota(perm.begin(), perm.end(), BoxId{0});

  PermutationOptimum best;
  do {
    const double cost = sa_cost(perm, instance);
    if (best.permutation.empty() || cost < best.cost - kTolerance) {
      best.cost = cost;
      best.permutation = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool is_mssc_instance(const Instance& instance) {
  for (double c : instance.costs) {
    if (c != 1.0) return false;
  }
  for (const Scenario& s : instance.scenarios) {
    for (double v : s.values) {
      if (v != 0.0 && is_finite(v)) return false;
    }
  }
  return true;
}

MsscResult mssc_greedy(const Instance& instance) {
  if (!is_mssc_instance(instance)) {
    throw Error("not a min-sum set cover instance (needs unit costs and {0, inf} values)");
  }
  const std::size_t n = instance.box_count();
  const std::size_t m = instance.scenario_count();

  MsscResult out;
  out.cover_step.assign(m, 0);
  std::vector<bool> covered(m, false);
  std::size_t remaining = m;

  while (remaining > 0) {
    BoxId pick = n;
    double pick_weight = 0.0;
    for (BoxId b = 0; b < n; ++b) {
      double w = 0.0;
      for (ScenarioId s = 0; s < m; ++s) {
        if (!covered[s] && instance.value(s, b) == 0.0) w += instance.weight(s);
      }
      if (w > pick_weight + kTolerance) {
        pick = b;
        pick_weight = w;
      }
    }
    if (pick == n) throw Error("uncoverable scenarios in set cover instance");

    out.order.push_back(pick);
    for (ScenarioId s = 0; s < m; ++s) {
      if (!covered[s] && instance.value(s, pick) == 0.0) {
        covered[s] = true;
        out.cover_step[s] = out.order.size();
        --remaining;
      }
    }
  }

  for (ScenarioId s = 0; s < m; ++s) {
    out.expected_cover_time += instance.weight(s) * static_cast<double>(out.cover_step[s]);
  }
  out.expected_cover_time /= instance.total_weight();
  return out;
}

Instance product_instance(const std::vector<std::vector<SupportPoint>>& supports,
                          std::vector<double> costs) {
  if (supports.size() != costs.size()) {
    throw Error("product instance needs one support per box");
  }
  std::size_t count = 1;
  for (std::size_t b = 0; b < supports.size(); ++b) {
    const auto& support = supports[b];
    if (support.empty()) throw Error("empty support for box " + std::to_string(b));
    double mass = 0.0;
    for (const auto& p : support) {
      if (!(p.probability > 0.0)) {
        throw Error("non-positive probability in support of box " + std::to_string(b));
      }
      mass += p.probability;
    }
    if (std::abs(mass - 1.0) > kTolerance) {
      throw Error("support of box " + std::to_string(b) + " sums to " +
                  std::to_string(mass));
    }
    if (count > kMaxProductScenarios / support.size()) {
      throw Error("product instance exceeds " + std::to_string(kMaxProductScenarios) +
                  " scenarios");
    }
    count *= support.size();
  }

  Instance out;
  out.costs = std::move(costs);
  out.scenarios.reserve(count);
  std::vector<std::size_t> digit(supports.size(), 0);
  for (std::size_t k = 0; k < count; ++k) {
    Scenario s;
    s.values.reserve(supports.size());
    for (std::size_t b = 0; b < supports.size(); ++b) {
      s.values.push_back(supports[b][digit[b]].value);
      s.weight *= supports[b][digit[b]].probability;
    }
    out.scenarios.push_back(std::move(s));
    // Odometer increment, last box fastest.
    for (std::size_t b = supports.size(); b-- > 0;) {
      if (++digit[b] < supports[b].size()) break;
      digit[b] = 0;
    }
  }
  return out;
}

BenchmarkReport benchmark_report(const Instance& instance, std::size_t max_boxes) {
  require_valid(instance);
  BenchmarkReport report;
  const PermutationOptimum opt = pa_opt_bruteforce(instance, max_boxes);
  report.alg_cost = run_partial(instance).cost.total();
  report.alg_full_cost = run_full(instance).cost.total();
  report.sa_opt = opt.cost;
  report.best_permutation = opt.permutation;
  report.ratio_partial = ratio(report.alg_cost, report.sa_opt);
  report.ratio_full = ratio(report.alg_full_cost, report.sa_opt);
  return report;
}

}  // namespace pandora
