#pragma once

#include "innerdyn/numerics/circle_point.hpp"

namespace innerdyn::moebius {

using num::BigComplex;
using num::BigReal;
using num::Bits;
using num::CirclePoint;

/// Disk automorphism z -> (u z + c) / (1 + conj(c) u z), |c| < 1, |u| = 1.
///
/// c is the image of 0; u is a pre-rotation. The normalizers used to move
/// f^n(0) back to the origin are the u = 1 members of this family.
class DiskAutomorphism {
 public:
  /// Throws DomainError unless |c| < 1.
  DiskAutomorphism(BigComplex c, CirclePoint u);
  static DiskAutomorphism identity(Bits prec);

  const BigComplex& c() const noexcept { return c_; }
  const CirclePoint& u() const noexcept { return u_; }
  Bits prec() const noexcept { return c_.prec(); }

  /// Throws DomainError if |z| > 1 + 2^(-prec/2).
  BigComplex apply(const BigComplex& z) const;
  /// Boundary action, computed as angle arithmetic so the result stays on the circle.
  CirclePoint apply(const CirclePoint& zeta) const;

  DiskAutomorphism inverse() const;

 private:
  BigComplex c_;
  CirclePoint u_;
};

/// outer o inner.
DiskAutomorphism compose(const DiskAutomorphism& outer, const DiskAutomorphism& inner);

/// The automorphism z -> (z + w) / (1 + conj(w) z) sending 0 to w. Throws DomainError if |w| >= 1.
DiskAutomorphism normalizer(const BigComplex& w);

/// Pseudo-hyperbolic distance |z - w| / |1 - conj(w) z| for z, w in the disk.
BigReal pseudo_hyperbolic_distance(const BigComplex& z, const BigComplex& w);

}  // namespace innerdyn::moebius
