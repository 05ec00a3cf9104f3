#include "pandora/reservation.hpp"

#include <algorithm>

namespace pandora {

namespace {

struct WeightedValue {
  double value;
  double weight;
};

std::vector<WeightedValue> finite_values_sorted(BoxId box, const ResidualState& state,
                                                const Instance& instance,
                                                bool normalized) {
  const double total = normalized ? instance.weight_of(state.alive) : 1.0;
  std::vector<WeightedValue> out;
  out.reserve(state.alive.size());
  for (ScenarioId s : state.alive) {
    const double v = instance.value(s, box);
    if (is_finite(v)) out.push_back({v, instance.weight(s) / total});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const WeightedValue& a, const WeightedValue& b) {
                     return a.value < b.value;
                   });
  return out;
}

void require_alive(const ResidualState& state) {
  if (state.alive.empty()) throw Error("no surviving scenarios");
}

}  // namespace

ReservationResult sigma_closed_form(BoxId box, const ResidualState& state,
                                    const Instance& instance) {
  require_alive(state);
  ReservationResult result;
  result.box = box;

  const auto sorted = finite_values_sorted(box, state, instance, false);
  if (sorted.empty()) return result;

  // For a fixed subset weight the numerator is smallest when the cheapest
  // values are taken first, so only prefixes need to be scanned.
  const double opening_mass = state.residual_costs[box] * instance.weight_of(state.alive);
  double prefix_weight = 0.0;
  double prefix_value = 0.0;
  for (const auto& [v, w] : sorted) {
    prefix_weight += w;
    prefix_value += w * v;
    result.sigma = std::min(result.sigma, (opening_mass + prefix_value) / prefix_weight);
  }

  for (ScenarioId s : state.alive) {
    if (instance.value(s, box) <= result.sigma + kTolerance) result.covered.push_back(s);
  }
  return result;
}

double sigma_fixed_point(BoxId box, const ResidualState& state, const Instance& instance) {
  require_alive(state);
  const double cost = state.residual_costs[box];
  const auto sorted = finite_values_sorted(box, state, instance, true);
  if (sorted.empty()) return kInfinity;

  // g(x) = sum_s p_s (x - v_s)^+ is zero up to the first breakpoint and then
  // piecewise linear with slope equal to the mass strictly below x.
  double slope = 0.0;
  double g_at_breakpoint = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double here = sorted[i].value;
    slope += sorted[i].weight;
    const bool last = i + 1 == sorted.size();
    const double next = last ? kInfinity : sorted[i + 1].value;
    const double g_at_next = last ? kInfinity : g_at_breakpoint + slope * (next - here);
    if (g_at_next >= cost) return here + (cost - g_at_breakpoint) / slope;
    g_at_breakpoint = g_at_next;
  }
  return kInfinity;  // unreachable: the last segment is unbounded
}

ReservationResult argmin_sigma(const ResidualState& state, const Instance& instance) {
  require_alive(state);
  ReservationResult best;
  bool found = false;
  for (BoxId b = 0; b < instance.box_count(); ++b) {
    ReservationResult candidate = sigma_closed_form(b, state, instance);
    if (!is_finite(candidate.sigma)) continue;
    if (!found || candidate.sigma < best.sigma - kTolerance) {
      best = std::move(candidate);
      found = true;
    }
  }
  if (!found) throw Error("uncoverable residual set");
  return best;
}

}  // namespace pandora
