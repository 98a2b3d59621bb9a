#pragma once

#include "innerdyn/moebius/arc.hpp"
#include "innerdyn/moebius/automorphism.hpp"

namespace innerdyn::moebius {

/// M^-1(J), with endpoints M^-1(J.start), M^-1(J.end); of the two arcs they
/// bound, the one containing M^-1(midpoint(J)) is returned.
Arc pullback_arc(const DiskAutomorphism& m, const Arc& j);

/// |I| for I = M_w^-1(J) from the sine identity
///   2 sin(|I|/2) = (1 - |w|^2) |b - a| / (|w - b| |w - a|),  J = [a, b).
///
/// The identity fixes |I| only up to |I| -> 2*pi - |I|; the branch is the one
/// on the same side of pi as 2*psi - |J|, psi being the counterclockwise angle
/// from a - w to b - w. RHS/2 within 2^(-prec/2) above 1 is taken as 1.
/// Throws DomainError if |w| >= 1, FormulaOutOfRange if RHS/2 exceeds that.
BigReal pullback_length_closed_form(const BigComplex& w, const Arc& j);

}  // namespace innerdyn::moebius
