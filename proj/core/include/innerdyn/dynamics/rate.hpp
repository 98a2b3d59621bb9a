#pragma once

#include <vector>

#include "innerdyn/dynamics/orbit.hpp"

namespace innerdyn::dynamics {

struct RateRow {
  int n;
  BigReal distance;
  /// distance / alpha^n
  BigReal upper_ratio;
  /// (alpha - delta)^n / distance
  BigReal lower_ratio;
  bool upper_holds;
  bool lower_holds;
};

/// Two-sided rate sandwich (1/C_lower)(alpha - delta)^n <= |f^n(0) - p| <= C_upper alpha^n.
struct RateReport {
  BigReal alpha;
  BigReal delta;
  BigReal c_upper;
  BigReal c_lower;
  int n_min = 0;
  int n_max = 0;
  std::vector<RateRow> rows;
  /// The running maximum of each ratio no longer grows over the last third of the window.
  bool upper_stable = false;
  bool lower_stable = false;
  bool satisfied = false;
};

/// Minimal constants over n in [n_min, last point], each clamped below by 1.
/// Stability allows growth of at most a relative 1e-6 in the last third.
/// Throws WindowTooShort with fewer than 10 usable points, DomainError unless 0 <= delta < alpha < 1.
RateReport verify_rate_bounds(const OrbitRecord& record, const BigReal& alpha, const BigReal& delta, int n_min);

struct SummabilityResult {
  /// 1 - |f^n(0)|, n = 0..horizon.
  std::vector<BigReal> terms;
  /// Partial sums of terms, n = 0..horizon.
  std::vector<BigReal> partial_sums;
  /// max term(n+1)/term(n) over the last half of [n_min, horizon].
  BigReal ratio_bound;
  bool geometric_tail_certificate = false;
  int n_min = 0;
  int horizon = 0;
};

/// Geometric-tail test for sum (1 - |f^n(0)|). Certificate iff ratio_bound < 1.
/// Throws DomainError if the record is not interior or shorter than horizon + 1,
/// or if the window [n_min, horizon] has fewer than 4 points.
SummabilityResult summability_check(const OrbitRecord& record, int horizon, int n_min = 10);

}  // namespace innerdyn::dynamics
