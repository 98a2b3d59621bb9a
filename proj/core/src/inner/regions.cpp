#include "innerdyn/inner/regions.hpp"

#include "innerdyn/errors.hpp"
#include "innerdyn/numerics/sampling.hpp"

namespace innerdyn::inner {

StolzAngle::StolzAngle(CirclePoint vertex, BigReal aperture, BigReal radius)
    : vertex_(std::move(vertex)), aperture_(std::move(aperture)), radius_(std::move(radius)) {
  if (aperture_ <= 0L || aperture_ >= num::ldexp(BigReal::pi(aperture_.prec()), -1)) {
    throw DomainError("Stolz aperture must lie in (0, pi/2)");
  }
  if (radius_ <= 0L || radius_ >= num::ldexp(num::cos(aperture_), 1)) {
    throw DomainError("Stolz radius must lie in (0, 2 cos(aperture))");
  }
}

bool in_stolz(const BigComplex& z, const StolzAngle& angle) {
  if (num::norm(z) >= 1L) return false;
  const BigComplex a = angle.vertex().rounded(z.prec()).embed();
  return num::abs(num::arg(1L - a.conj() * z)) < angle.aperture() && num::abs(z - a) < angle.radius();
}

WolffRegion::WolffRegion(CirclePoint p, BigReal eta) : p_(std::move(p)), eta_(std::move(eta)) {
  if (eta_ <= 0L) throw DomainError("Wolff region parameter eta must be positive");
}

bool in_wolff(const BigComplex& z, const WolffRegion& region) {
  const BigReal modulus_sq = num::norm(z);
  if (modulus_sq >= 1L) return false;
  return num::norm(region.p().rounded(z.prec()).embed() - z) < region.eta() * (1L - modulus_sq);
}

BigComplex sample_wolff(const WolffRegion& region, std::uint64_t seed, std::uint64_t index, Bits prec) {
  const BigReal eta = region.eta().rounded(prec);
  const BigComplex center = region.p().rounded(prec).embed() / (eta + 1L);
  const BigReal radius = eta / (eta + 1L) * num::sqrt(num::uniform_unit({seed, index, 1}, prec));
  const BigReal angle = BigReal::two_pi(prec) * num::uniform_unit({seed, index, 2}, prec);
  return center + BigComplex::polar(radius, angle);
}

}  // namespace innerdyn::inner
