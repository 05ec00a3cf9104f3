#pragma once

// Seeded instance generators. Every generator is a pure function of its
// arguments and always returns a valid instance.

#include <cstdint>
#include <string_view>
#include <vector>

#include "pandora/benchmarks.hpp"
#include "pandora/model.hpp"

namespace pandora {

inline constexpr std::size_t kMaxGeneratedBoxes = 12;
inline constexpr std::size_t kMaxGeneratedScenarios = 10000;

struct RandomInstanceOptions {
  double min_cost = 0.5;
  double max_cost = 2.0;
  int max_value = 9;
  double infinity_probability = 0.1;
  /// 0 gives unit weights; otherwise integer weights drawn from [1, max_weight].
  int max_weight = 0;
};

/// Costs U[min_cost, max_cost], values uniform on {0..max_value} and +inf
/// with the given probability; a scenario left with no finite value gets one
/// at a random box.
Instance random_instance(std::size_t boxes, std::size_t scenarios, std::uint64_t seed,
                         const RandomInstanceOptions& options = {});

/// Unit costs and {0, +inf} values; each scenario has at least one zero.
Instance mssc_instance(std::size_t boxes, std::size_t scenarios, std::uint64_t seed,
                       double zero_probability = 0.3);

/// Parses "v:p,v:p;v:p" (boxes separated by ';', support points by ',').
/// Values may be "inf". Throws Error on malformed input.
std::vector<std::vector<SupportPoint>> parse_supports(std::string_view text);

/// Box 0 costs 1/H and every other box costs H. With probability 1 - 1/H
/// the first scenario has value 0 in box 0; the remaining scenarios share
/// probability 1/H and hide +inf in box 0.
Instance adversarial_cost_instance(std::size_t boxes, std::size_t scenarios, double scale,
                                   std::uint64_t seed);

}  // namespace pandora
