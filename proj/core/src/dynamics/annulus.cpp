#include "innerdyn/dynamics/annulus.hpp"

#include <algorithm>

#include "innerdyn/errors.hpp"

namespace innerdyn::dynamics {

namespace {

BigReal radius(const BigReal& alpha, const BigReal& exponent_factor, int n, Bits prec) {
  return num::pow(alpha.rounded(prec), exponent_factor.rounded(prec) * static_cast<long>(n));
}

}  // namespace

AnnulusSpec::AnnulusSpec(CirclePoint p, BigReal alpha, BigReal epsilon)
    : p_(std::move(p)), alpha_(std::move(alpha)), epsilon_(std::move(epsilon)) {
  if (!(alpha_ > 0L) || !(alpha_ < 1L)) throw DomainError("annulus needs alpha in (0, 1)");
  if (!(epsilon_ > 0L) || !(epsilon_ < 1L)) throw DomainError("annulus needs epsilon in (0, 1)");
}

BigReal AnnulusSpec::inner_radius(int n, Bits prec) const { return radius(alpha_, epsilon_ + 1L, n, prec); }

BigReal AnnulusSpec::outer_radius(int n, Bits prec) const { return radius(alpha_, 1L - epsilon_, n, prec); }

bool in_annulus(const AnnulusSpec& spec, int n, const BigReal& distance) {
  if (n < 1) throw DomainError("in_annulus needs n >= 1");
  const Bits prec = std::max(distance.prec(), spec.alpha().prec());
  return spec.inner_radius(n, prec) < distance && distance < spec.outer_radius(n, prec);
}

bool in_annulus(const AnnulusSpec& spec, int n, const CirclePoint& zeta) {
  return in_annulus(spec, n, num::chordal_distance(zeta, spec.p().rounded(zeta.prec())));
}

}  // namespace innerdyn::dynamics
