#pragma once

#include "innerdyn/numerics/big_complex.hpp"

namespace innerdyn::num {

/// A point of the unit circle stored by its angle in [0, 2*pi).
///
/// The angle is the canonical representation; the complex embedding
/// (cos, sin) is produced only on demand so |z| never drifts from 1.
class CirclePoint {
 public:
  explicit CirclePoint(Bits prec = kMinBits);  // the point 1
  /// Any real angle; reduced into [0, 2*pi) at the angle's precision.
  explicit CirclePoint(const BigReal& angle);

  static CirclePoint from_complex(const BigComplex& z);  // z != 0
  static CirclePoint one(Bits prec) { return CirclePoint(prec); }

  const BigReal& angle() const noexcept { return angle_; }
  Bits prec() const noexcept { return angle_.prec(); }
  CirclePoint rounded(Bits prec) const;

  BigComplex embed() const;
  CirclePoint antipode() const;
  /// Rotation by `delta` radians.
  CirclePoint rotated(const BigReal& delta) const;
  /// Counterclockwise angular offset from `from` to this point, in [0, 2*pi).
  BigReal offset_from(const CirclePoint& from) const;

  friend bool operator==(const CirclePoint& a, const CirclePoint& b) { return a.angle_ == b.angle_; }

 private:
  BigReal angle_;
};

/// Reduces an angle into [0, 2*pi). Idempotent.
BigReal normalize_angle(const BigReal& angle);

/// Euclidean distance |a - b|; for circle points computed as 2|sin((a-b)/2)|.
BigReal chordal_distance(const CirclePoint& a, const CirclePoint& b);
BigReal chordal_distance(const BigComplex& a, const BigComplex& b);
BigReal chordal_distance(const CirclePoint& a, const BigComplex& b);
BigReal chordal_distance(const BigComplex& a, const CirclePoint& b);

}  // namespace innerdyn::num
