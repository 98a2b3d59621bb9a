#pragma once

#include <cstdint>

#include "innerdyn/numerics/circle_point.hpp"

namespace innerdyn::inner {

using num::BigComplex;
using num::BigReal;
using num::Bits;
using num::CirclePoint;

/// Stolz angle at `vertex`: |arg(1 - conj(a) z)| < aperture and |z - a| < radius.
///
/// The radius is bounded by 2 cos(aperture), the largest value for which the
/// truncated cone stays inside the disk.
class StolzAngle {
 public:
  /// Throws DomainError unless aperture in (0, pi/2) and 0 < radius < 2 cos(aperture).
  StolzAngle(CirclePoint vertex, BigReal aperture, BigReal radius);

  const CirclePoint& vertex() const noexcept { return vertex_; }
  const BigReal& aperture() const noexcept { return aperture_; }
  const BigReal& radius() const noexcept { return radius_; }

 private:
  CirclePoint vertex_;
  BigReal aperture_;
  BigReal radius_;
};

/// Both defining inequalities, strictly; false outside the open disk.
bool in_stolz(const BigComplex& z, const StolzAngle& angle);

/// Horodisk H(p, eta) = { z : |p - z|^2 < eta (1 - |z|^2) }, the disk of
/// centre p/(1 + eta) and radius eta/(1 + eta) tangent to the circle at p.
class WolffRegion {
 public:
  /// Throws DomainError unless eta > 0.
  WolffRegion(CirclePoint p, BigReal eta);

  const CirclePoint& p() const noexcept { return p_; }
  const BigReal& eta() const noexcept { return eta_; }

 private:
  CirclePoint p_;
  BigReal eta_;
};

bool in_wolff(const BigComplex& z, const WolffRegion& region);

/// Uniform point of the horodisk, derived from (seed, index) alone.
BigComplex sample_wolff(const WolffRegion& region, std::uint64_t seed, std::uint64_t index, Bits prec);

}  // namespace innerdyn::inner
