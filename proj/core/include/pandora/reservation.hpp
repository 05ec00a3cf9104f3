#pragma once

#include <vector>

#include "pandora/model.hpp"

namespace pandora {

/// Reservation value of one box against a residual scenario set, together
/// with the scenarios that would stop at it.
struct ReservationResult {
  double sigma = kInfinity;
  BoxId box = 0;
  /// { s alive : value(s, box) <= sigma }, sorted. Empty iff sigma is
  /// infinite.
  std::vector<ScenarioId> covered;
};

/// sigma_b = min over nonempty A of (c_b W(alive) + sum_{s in A} w_s v_s) / W(A),
/// where c_b is the residual cost. Evaluated as a scan over weighted prefixes
/// of the alive set sorted by value.
ReservationResult sigma_closed_form(BoxId box, const ResidualState& state,
                                    const Instance& instance);

/// Root of E_{s ~ D | alive}[(sigma - v_s)^+] = c_b, found exactly on the
/// piecewise-linear left-hand side. Returns +inf when every value is
/// infinite; for c_b = 0 returns the smallest finite value.
double sigma_fixed_point(BoxId box, const ResidualState& state,
                         const Instance& instance);

/// Box with the smallest reservation value; lowest index wins ties.
/// Throws Error if no box has a finite reservation value.
ReservationResult argmin_sigma(const ResidualState& state, const Instance& instance);

}  // namespace pandora
