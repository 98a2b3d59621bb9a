#pragma once

#include "innerdyn/inner/inner_function.hpp"
#include "innerdyn/numerics/precision.hpp"

namespace innerdyn::inner {

using num::PrecisionPolicy;

/// Boundary Denjoy-Wolff point from the orbit of 0.
///
/// Stops once the projected angle z_n/|z_n| has moved less than `tol` for five
/// consecutive steps while 1 - |z_n| < sqrt(tol). Escalated: two precisions
/// must give points within 2^-agreement_tol_bits. Throws NotBoundaryConverging
/// if the orbit settles inside the disk or the budget runs out.
CirclePoint denjoy_wolff(const InnerFunction& f, const PrecisionPolicy& policy, const BigReal& tol,
                         int max_iterations = 4000);

enum class AngularMethod { Radial, OrbitRatio };

struct AngularDerivativeOptions {
  /// Successive estimates must agree to 2^-tol_bits.
  long tol_bits = 50;
  int max_steps = 2000;
  /// Trailing window of the averaged orbit ratio.
  int window = 5;
};

/// Angular derivative f'(p) at the Denjoy-Wolff point p.
///
/// Radial: Re (f(rp) - p)/(rp - p) for r = 1 - 2^-k, k = 4, 5, ...
/// OrbitRatio: mean of |f^(n+1)(0) - p| / |f^n(0) - p| over a trailing window.
/// Throws NotConverging when the estimates do not settle within max_steps.
BigReal angular_derivative(const InnerFunction& f, const CirclePoint& p, AngularMethod method,
                           const PrecisionPolicy& policy, const AngularDerivativeOptions& options = {});

}  // namespace innerdyn::inner
