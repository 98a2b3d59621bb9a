#include "innerdyn/inner/iteration.hpp"

#include "innerdyn/errors.hpp"
#include "innerdyn/moebius/cayley.hpp"

namespace innerdyn::inner {

using moebius::Cayley;

namespace {

const HalfPlaneConjugated* as_halfplane(const InnerFunction& f) {
  return std::get_if<HalfPlaneConjugated>(&f.variant());
}

}  // namespace

InteriorIterate interior_origin(const InnerFunction& f, Bits prec) {
  if (as_halfplane(f)) return {BigComplex(prec), BigComplex::i(prec)};
  return {BigComplex(prec), std::nullopt};
}

InteriorIterate interior_step(const InnerFunction& f, const InteriorIterate& it) {
  if (const auto* g = as_halfplane(f); g && it.w) {
    BigComplex w = halfplane_eval(*g, *it.w);
    BigComplex z = Cayley::to_disk(w);
    return {std::move(z), std::move(w)};
  }
  return {eval_interior(f, it.z), std::nullopt};
}

BoundaryIterate boundary_start(const InnerFunction& f, const CirclePoint& zeta) {
  if (as_halfplane(f)) {
    if (zeta.angle().is_zero()) throw SingularPoint("boundary orbit starts at the point at infinity", 0);
    return {zeta, Cayley::circle_to_real(zeta)};
  }
  return {zeta, std::nullopt};
}

BoundaryIterate boundary_step(const InnerFunction& f, const BoundaryIterate& it) {
  if (const auto* g = as_halfplane(f); g && it.x) {
    BigReal x = halfplane_eval(*g, *it.x);
    CirclePoint zeta = Cayley::real_to_circle(x);
    return {std::move(zeta), std::move(x)};
  }
  return {eval_boundary(f, it.zeta), std::nullopt};
}

BigReal distance_to(const InteriorIterate& it, const CirclePoint& p) {
  if (it.w && p.angle().is_zero()) return Cayley::distance_to_one(*it.w);
  return num::chordal_distance(p.rounded(it.z.prec()), it.z);
}

BigReal one_minus_modulus(const InteriorIterate& it) {
  if (it.w) {
    const BigReal one_minus_sq = it.w->im() * 4L / num::norm(*it.w + BigComplex::i(it.w->prec()));
    return one_minus_sq / (num::abs(it.z) + 1L);
  }
  return 1L - num::abs(it.z);
}

BigReal distance_to(const BoundaryIterate& it, const CirclePoint& p) {
  if (it.x && p.angle().is_zero()) return Cayley::distance_to_one(*it.x);
  return num::chordal_distance(it.zeta, p.rounded(it.zeta.prec()));
}

}  // namespace innerdyn::inner
