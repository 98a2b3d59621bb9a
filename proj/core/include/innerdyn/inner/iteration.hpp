#pragma once

#include <optional>

#include "innerdyn/inner/inner_function.hpp"

namespace innerdyn::inner {

/// A point of an interior orbit. For a top-level HalfPlaneConjugated map the
/// half-plane coordinate w is iterated natively and z = C(w) is derived, so
/// quantities near the Denjoy-Wolff point 1 keep their relative precision.
struct InteriorIterate {
  BigComplex z;
  std::optional<BigComplex> w;
};

/// A point of a boundary orbit; x is the native real-line coordinate for
/// half-plane conjugated maps.
struct BoundaryIterate {
  CirclePoint zeta;
  std::optional<BigReal> x;
};

/// The origin (w = i for half-plane maps).
InteriorIterate interior_origin(const InnerFunction& f, Bits prec);
InteriorIterate interior_step(const InnerFunction& f, const InteriorIterate& it);

/// Throws SingularPoint when a half-plane map starts at 1 (x = infinity).
BoundaryIterate boundary_start(const InnerFunction& f, const CirclePoint& zeta);
BoundaryIterate boundary_step(const InnerFunction& f, const BoundaryIterate& it);

/// |z - p|; computed as 2/|w + i| when p = 1 and w is available.
BigReal distance_to(const InteriorIterate& it, const CirclePoint& p);
/// 1 - |z|.
BigReal one_minus_modulus(const InteriorIterate& it);
/// |zeta - p|; computed as 2/sqrt(1 + x^2) when p = 1 and x is available.
BigReal distance_to(const BoundaryIterate& it, const CirclePoint& p);

}  // namespace innerdyn::inner
