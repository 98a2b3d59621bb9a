#include "innerdyn/numerics/circle_point.hpp"

#include <algorithm>

#include "innerdyn/errors.hpp"

namespace innerdyn::num {

BigReal normalize_angle(const BigReal& angle) {
  const BigReal period = BigReal::two_pi(angle.prec());
  BigReal reduced = fmod(angle, period);
  if (reduced < 0L) reduced = reduced + period;
  // rounding of reduced + period can land exactly on the period
  if (reduced >= period) reduced = BigReal(angle.prec());
  return reduced;
}

CirclePoint::CirclePoint(Bits prec) : angle_(prec) {}

CirclePoint::CirclePoint(const BigReal& angle) : angle_(normalize_angle(angle)) {}

CirclePoint CirclePoint::from_complex(const BigComplex& z) {
  if (z.re().is_zero() && z.im().is_zero()) throw DomainError("cannot project 0 onto the unit circle");
  return CirclePoint(arg(z));
}

CirclePoint CirclePoint::rounded(Bits prec) const { return CirclePoint(angle_.rounded(prec)); }

BigComplex CirclePoint::embed() const { return {cos(angle_), sin(angle_)}; }

CirclePoint CirclePoint::antipode() const { return CirclePoint(angle_ + BigReal::pi(prec())); }

CirclePoint CirclePoint::rotated(const BigReal& delta) const { return CirclePoint(angle_ + delta); }

BigReal CirclePoint::offset_from(const CirclePoint& from) const { return normalize_angle(angle_ - from.angle_); }

BigReal chordal_distance(const CirclePoint& a, const CirclePoint& b) {
  return ldexp(abs(sin(ldexp(a.angle() - b.angle(), -1))), 1);
}

BigReal chordal_distance(const BigComplex& a, const BigComplex& b) { return abs(a - b); }

BigReal chordal_distance(const CirclePoint& a, const BigComplex& b) {
  return abs(a.rounded(std::max(a.prec(), b.prec())).embed() - b);
}

BigReal chordal_distance(const BigComplex& a, const CirclePoint& b) { return chordal_distance(b, a); }

}  // namespace innerdyn::num
