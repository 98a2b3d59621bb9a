#include "innerdyn/moebius/pullback.hpp"

#include <algorithm>

#include "innerdyn/errors.hpp"

namespace innerdyn::moebius {

Arc pullback_arc(const DiskAutomorphism& m, const Arc& j) {
  const DiskAutomorphism inv = m.inverse();
  Arc candidate(inv.apply(j.start()), inv.apply(j.end()));
  if (candidate.contains(inv.apply(j.midpoint()))) return candidate;
  return candidate.complement();
}

BigReal pullback_length_closed_form(const BigComplex& w, const Arc& j) {
  if (num::norm(w) >= 1L) throw DomainError("pullback length requires |w| < 1");
  const num::Bits prec = std::max(w.prec(), j.prec());
  const BigComplex wp = w.rounded(prec);
  const BigComplex a = j.start().rounded(prec).embed();
  const BigComplex b = j.end().rounded(prec).embed();

  const BigReal chord = num::chordal_distance(j.start(), j.end()).rounded(prec);
  BigReal half_rhs =
      num::ldexp((1L - num::norm(wp)) * chord / (num::abs(wp - b) * num::abs(wp - a)), -1);
  if (half_rhs > 1L) {
    if (half_rhs - 1L > BigReal::pow2(-prec / 2, prec)) {
      throw FormulaOutOfRange("sine identity gives 2 sin(|I|/2) = " + num::ldexp(half_rhs, 1).to_string(20));
    }
    half_rhs = BigReal(1L, prec);
  }
  const BigReal short_branch = num::ldexp(num::asin(half_rhs), 1);

  const BigReal two_pi = BigReal::two_pi(prec);
  const BigReal psi = num::normalize_angle(num::arg((b - wp) / (a - wp)));
  const BigReal harmonic = num::ldexp(psi, 1) - j.length().rounded(prec);
  if (harmonic > BigReal::pi(prec)) return two_pi - short_branch;
  return short_branch;
}

}  // namespace innerdyn::moebius
