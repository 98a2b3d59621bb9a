#include "innerdyn/moebius/cayley.hpp"

#include "innerdyn/errors.hpp"

namespace innerdyn::moebius {

BigComplex Cayley::to_disk(const BigComplex& w) {
  if (w.im() <= 0L) throw DomainError("Cayley transform requires Im w > 0");
  const BigComplex i = BigComplex::i(w.prec());
  return (w - i) / (w + i);
}

BigComplex Cayley::to_halfplane(const BigComplex& z) {
  if (num::norm(z) >= 1L) throw DomainError("inverse Cayley transform requires |z| < 1");
  return BigComplex::i(z.prec()) * (z + 1L) / (1L - z);
}

CirclePoint Cayley::real_to_circle(const BigReal& x) {
  return CirclePoint(BigReal::pi(x.prec()) + num::ldexp(num::atan(x), 1));
}

BigReal Cayley::circle_to_real(const CirclePoint& zeta) {
  if (zeta.angle().is_zero()) throw DomainError("1 has no preimage on the real line");
  return -num::cot(num::ldexp(zeta.angle(), -1));
}

BigReal Cayley::distance_to_one(const BigReal& x) { return 2L / num::hypot(x, BigReal(1L, x.prec())); }

BigReal Cayley::distance_to_one(const BigComplex& w) { return 2L / num::abs(w + BigComplex::i(w.prec())); }

}  // namespace innerdyn::moebius
