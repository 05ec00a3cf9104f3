#pragma once

// Instances of Pandora's Box with a correlated, finite-support value
// distribution: n boxes with opening costs and m weighted scenarios, each a
// full vector of box values.

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pandora {

using BoxId = std::size_t;
using ScenarioId = std::size_t;

/// Values and reservation values live on the extended non-negative reals.
/// +infinity is IEEE infinity, so inf + x = inf and min(inf, x) = x hold
/// without special casing.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Absolute tolerance for every comparison made by the solvers.
inline constexpr double kTolerance = 1e-9;

inline bool is_finite(double v) { return std::isfinite(v); }

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

struct Scenario {
  std::vector<double> values;
  double weight = 1.0;
};

struct Instance {
  std::vector<double> costs;
  std::vector<Scenario> scenarios;

  std::size_t box_count() const { return costs.size(); }
  std::size_t scenario_count() const { return scenarios.size(); }
  double value(ScenarioId s, BoxId b) const { return scenarios[s].values[b]; }
  double weight(ScenarioId s) const { return scenarios[s].weight; }
  double total_weight() const;
  /// Sum of weights over a subset of scenarios.
  double weight_of(std::span<const ScenarioId> subset) const;
};

/// Expected cost of a policy split into what is paid to open boxes and what
/// is paid for the accepted value.
struct CostBreakdown {
  double opening = 0.0;
  double value = 0.0;

  double total() const { return opening + value; }
};

/// All invariant violations of `instance`; empty means valid.
std::vector<std::string> validate(const Instance& instance);

/// Throws ValidationError when validate() reports anything.
void require_valid(const Instance& instance);

/// Rescales weights to sum to one. Throws Error when the total is zero.
Instance normalize(const Instance& instance);

/// Surviving scenarios and per-box residual costs during a solver run.
/// A box that has been opened costs nothing from then on.
struct ResidualState {
  std::vector<ScenarioId> alive;
  std::vector<double> residual_costs;
  std::vector<bool> opened;

  static ResidualState initial(const Instance& instance);

  bool empty() const { return alive.empty(); }
  void open(BoxId box);
  /// Drops `covered` (sorted) from the alive set.
  void remove(std::span<const ScenarioId> covered);
  /// residual_costs[b] == 0 iff opened[b], otherwise equal to the instance
  /// cost; alive indices in range and strictly increasing.
  bool consistent(const Instance& instance) const;
};

/// Pr[s | alive] for every alive scenario. Throws Error on an empty set.
std::map<ScenarioId, double> conditional_weight(const ResidualState& state,
                                                const Instance& instance);

}  // namespace pandora
