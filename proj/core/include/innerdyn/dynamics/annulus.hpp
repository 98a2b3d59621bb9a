#pragma once

#include "innerdyn/numerics/circle_point.hpp"

namespace innerdyn::dynamics {

using num::BigReal;
using num::Bits;
using num::CirclePoint;

/// The family A(p; alpha^((1+eps)n), alpha^((1-eps)n)).
class AnnulusSpec {
 public:
  /// Throws DomainError unless alpha and epsilon lie in (0, 1).
  AnnulusSpec(CirclePoint p, BigReal alpha, BigReal epsilon);

  const CirclePoint& p() const noexcept { return p_; }
  const BigReal& alpha() const noexcept { return alpha_; }
  const BigReal& epsilon() const noexcept { return epsilon_; }

  BigReal inner_radius(int n, Bits prec) const;
  BigReal outer_radius(int n, Bits prec) const;

 private:
  CirclePoint p_;
  BigReal alpha_;
  BigReal epsilon_;
};

/// inner_radius(n) < |zeta - p| < outer_radius(n), strict; n >= 1.
bool in_annulus(const AnnulusSpec& spec, int n, const CirclePoint& zeta);
/// Same test on a precomputed distance |zeta - p|.
bool in_annulus(const AnnulusSpec& spec, int n, const BigReal& distance);

}  // namespace innerdyn::dynamics
