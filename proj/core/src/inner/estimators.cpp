#include "innerdyn/inner/estimators.hpp"

#include <deque>

#include "innerdyn/errors.hpp"
#include "innerdyn/inner/iteration.hpp"

namespace innerdyn::inner {

namespace {

constexpr int kStableSteps = 5;

CirclePoint denjoy_wolff_at(const InnerFunction& f, const BigReal& tol0, int max_iterations, Bits prec) {
  const BigReal tol = tol0.rounded(prec);
  const BigReal depth = num::sqrt(tol);
  InteriorIterate it = interior_origin(f, prec);
  std::optional<CirclePoint> previous;
  int streak = 0;
  for (int n = 1; n <= max_iterations; ++n) {
    InteriorIterate next = interior_step(f, it);
    const BigReal gap = one_minus_modulus(next);
    if (gap > depth && num::abs(next.z - it.z) < tol) {
      throw NotBoundaryConverging("orbit of 0 settles inside the disk near " + next.z.re().to_string(12) + " + " +
                                  next.z.im().to_string(12) + "i");
    }
    it = std::move(next);
    if (it.z.re().is_zero() && it.z.im().is_zero()) continue;
    CirclePoint angle = CirclePoint::from_complex(it.z);
    if (previous && num::chordal_distance(angle, *previous) < tol) {
      ++streak;
    } else {
      streak = 0;
    }
    previous = std::move(angle);
    if (streak >= kStableSteps && gap < depth) return *previous;
  }
  throw NotBoundaryConverging("|f^n(0)| did not approach 1 within " + std::to_string(max_iterations) + " iterations");
}

BigReal radial_estimate(const InnerFunction& f, const CirclePoint& p, const AngularDerivativeOptions& options,
                        Bits prec, Bits agreement_bits) {
  const BigComplex pe = p.rounded(prec).embed();
  std::optional<BigReal> previous;
  for (long k = 4; k < 4 + options.max_steps; ++k) {
    // f(z) - p carries about prec - k significant bits
    if (prec - k < agreement_bits + options.tol_bits) throw num::NeedMorePrecision("radial difference quotient underflows");
    const BigReal r = 1L - BigReal::pow2(-k, prec);
    const BigComplex z = pe * r;
    BigReal estimate = ((eval_interior(f, z) - pe) / (z - pe)).re();
    if (previous && num::abs(estimate - *previous) < BigReal::pow2(-options.tol_bits, prec)) return estimate;
    previous = std::move(estimate);
  }
  throw NotConverging("radial angular derivative estimates did not stabilize");
}

BigReal orbit_ratio_estimate(const InnerFunction& f, const CirclePoint& p, const AngularDerivativeOptions& options,
                             Bits prec, Bits agreement_bits) {
  const BigReal floor_distance = BigReal::pow2(-(prec - agreement_bits - options.tol_bits), prec);
  InteriorIterate it = interior_origin(f, prec);
  BigReal distance = distance_to(it, p);
  std::deque<BigReal> ratios;
  std::optional<BigReal> previous;
  for (int n = 1; n <= options.max_steps; ++n) {
    it = interior_step(f, it);
    BigReal next = distance_to(it, p);
    if (!it.w && next < floor_distance) throw num::NeedMorePrecision("orbit distances below working precision");
    if (next.is_zero() || distance.is_zero()) throw NotConverging("orbit of 0 reached p exactly");
    ratios.push_back(next / distance);
    distance = std::move(next);
    if (static_cast<int>(ratios.size()) > options.window) ratios.pop_front();
    if (static_cast<int>(ratios.size()) < options.window) continue;
    BigReal mean(prec);
    for (const BigReal& r : ratios) mean += r;
    mean /= BigReal(static_cast<long>(ratios.size()), prec);
    if (previous && num::abs(mean - *previous) < BigReal::pow2(-options.tol_bits, prec)) return mean;
    previous = std::move(mean);
  }
  throw NotConverging("orbit-ratio angular derivative estimates did not stabilize");
}

}  // namespace

CirclePoint denjoy_wolff(const InnerFunction& f, const PrecisionPolicy& policy, const BigReal& tol,
                         int max_iterations) {
  return num::escalate([&](Bits prec) { return denjoy_wolff_at(f, tol, max_iterations, prec); }, policy,
                       [](const CirclePoint& a, const CirclePoint& b, Bits tol_bits) {
                         return num::chordal_distance(a, b) < BigReal::pow2(-tol_bits, b.prec());
                       })
      .value;
}

BigReal angular_derivative(const InnerFunction& f, const CirclePoint& p, AngularMethod method,
                           const PrecisionPolicy& policy, const AngularDerivativeOptions& options) {
  return num::escalate(
             [&](Bits prec) {
               return method == AngularMethod::Radial
                          ? radial_estimate(f, p, options, prec, policy.agreement_tol_bits)
                          : orbit_ratio_estimate(f, p, options, prec, policy.agreement_tol_bits);
             },
             policy)
      .value;
}

}  // namespace innerdyn::inner
