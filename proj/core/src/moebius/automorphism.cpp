#include "innerdyn/moebius/automorphism.hpp"

#include <algorithm>

#include "innerdyn/errors.hpp"

namespace innerdyn::moebius {

namespace {

// 1 + conj(c) v, whose argument drives the boundary action
BigComplex denominator(const BigComplex& c, const BigComplex& v) { return c.conj() * v + 1L; }

}  // namespace

DiskAutomorphism::DiskAutomorphism(BigComplex c, CirclePoint u) : c_(std::move(c)), u_(std::move(u)) {
  if (num::norm(c_) >= 1L) throw DomainError("disk automorphism requires |c| < 1");
}

DiskAutomorphism DiskAutomorphism::identity(Bits prec) { return {BigComplex(prec), CirclePoint(prec)}; }

BigComplex DiskAutomorphism::apply(const BigComplex& z) const {
  const Bits prec = std::max(z.prec(), c_.prec());
  if (num::abs(z) > BigReal::pow2(-prec / 2, prec) + 1L) throw DomainError("automorphism applied outside the closed disk");
  const BigComplex v = u_.rounded(prec).embed() * z;
  return (v + c_) / denominator(c_, v);
}

CirclePoint DiskAutomorphism::apply(const CirclePoint& zeta) const {
  const Bits prec = std::max(zeta.prec(), c_.prec());
  const CirclePoint v(zeta.angle().rounded(prec) + u_.angle());
  return CirclePoint(v.angle() - num::ldexp(num::arg(denominator(c_, v.embed())), 1));
}

DiskAutomorphism DiskAutomorphism::inverse() const {
  const CirclePoint u_bar(-u_.angle());
  return {-(u_bar.embed() * c_), u_bar};
}

DiskAutomorphism compose(const DiskAutomorphism& outer, const DiskAutomorphism& inner) {
  const BigComplex c = outer.apply(inner.c());
  // rotation read off the derivative at 0; positive real factors do not change its argument
  const BigComplex rotated_c2 = outer.u().embed() * inner.c();
  const BigReal angle =
      outer.u().angle() + inner.u().angle() - num::ldexp(num::arg(outer.c().conj() * rotated_c2 + 1L), 1);
  return {c, CirclePoint(angle)};
}

DiskAutomorphism normalizer(const BigComplex& w) {
  if (num::norm(w) >= 1L) throw DomainError("normalizer requires |w| < 1");
  return {w, CirclePoint(w.prec())};
}

BigReal pseudo_hyperbolic_distance(const BigComplex& z, const BigComplex& w) {
  return num::abs(z - w) / num::abs(1L - w.conj() * z);
}

}  // namespace innerdyn::moebius
