#pragma once

#include "innerdyn/numerics/circle_point.hpp"

namespace innerdyn::moebius {

using num::BigComplex;
using num::BigReal;
using num::CirclePoint;

/// The fixed Cayley pair C(w) = (w - i)/(w + i), C^-1(z) = i(1 + z)/(1 - z)
/// between the upper half-plane and the disk. C(i) = 0, C(inf) = 1.
struct Cayley {
  /// Throws DomainError unless Im w > 0.
  static BigComplex to_disk(const BigComplex& w);
  /// Throws DomainError unless |z| < 1.
  static BigComplex to_halfplane(const BigComplex& z);

  /// Boundary variant on the real line: angle pi + 2 atan(x).
  static CirclePoint real_to_circle(const BigReal& x);
  /// Inverse of real_to_circle, x = -cot(theta/2). Throws DomainError at zeta = 1.
  static BigReal circle_to_real(const CirclePoint& zeta);

  /// |C(x) - 1| = 2 / sqrt(1 + x^2), without forming C(x).
  static BigReal distance_to_one(const BigReal& x);
  /// |C(w) - 1| = 2 / |w + i|.
  static BigReal distance_to_one(const BigComplex& w);
};

}  // namespace innerdyn::moebius
