#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "innerdyn/moebius/automorphism.hpp"

namespace innerdyn::inner {

using num::BigComplex;
using num::BigReal;
using num::Bits;
using num::CirclePoint;

class InnerFunction;

/// phi_a(z) = (z + a)/(1 + a z), a real in (0, 1).
struct Automorphism {
  moebius::DiskAutomorphism map;
};

/// rotation * prod_k (|a_k|/a_k) (a_k - z)/(1 - conj(a_k) z), with factor z for a_k = 0.
struct BlaschkeProduct {
  std::vector<BigComplex> zeros;
  CirclePoint rotation;
};

/// S(z) = exp(-t (sigma + z)/(sigma - z)).
struct AtomicSingular {
  BigReal mass;
  CirclePoint singularity;
};

enum class HalfPlaneMap {
  Rational2,      // F(w) = lambda w - 1/w
  LinearPlusTan,  // F(w) = lambda w + tan w
};

/// C o F o C^-1 for an upper half-plane self-map F.
struct HalfPlaneConjugated {
  HalfPlaneMap map;
  BigReal lambda;
};

/// outer o inner.
struct Composition {
  std::shared_ptr<const InnerFunction> outer;
  std::shared_ptr<const InnerFunction> inner;
};

/// Closed sum of evaluable inner functions. Parameters are stored at the
/// precision they were parsed at and rounded to each evaluation's precision.
class InnerFunction {
 public:
  using Variant = std::variant<Automorphism, BlaschkeProduct, AtomicSingular, HalfPlaneConjugated, Composition>;

  /// Throws DomainError unless 0 < a < 1.
  static InnerFunction automorphism(const BigReal& a);
  /// Throws DomainError if there are no zeros or some |a_k| >= 1.
  static InnerFunction blaschke(std::vector<BigComplex> zeros, CirclePoint rotation);
  /// Throws DomainError unless t > 0.
  static InnerFunction atomic_singular(const BigReal& mass, CirclePoint singularity);
  /// Throws DomainError unless lambda > 1.
  static InnerFunction rational2(const BigReal& lambda);
  static InnerFunction linear_plus_tan(const BigReal& lambda);
  static InnerFunction compose(InnerFunction outer, InnerFunction inner);

  const Variant& variant() const noexcept { return variant_; }
  std::string describe() const;

 private:
  explicit InnerFunction(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

/// f(z) at z's precision. Throws DomainError for |z| >= 1.
BigComplex eval_interior(const InnerFunction& f, const BigComplex& z);

/// Radial boundary value f*(zeta) at zeta's precision.
/// Throws SingularPoint within 2^(-prec/2) of the singular set.
CirclePoint eval_boundary(const InnerFunction& f, const CirclePoint& zeta);

/// F on the upper half-plane.
BigComplex halfplane_eval(const HalfPlaneConjugated& g, const BigComplex& w);
/// F on the real line. Throws SingularPoint at a pole of F (x = 0 for Rational2,
/// |cos x| < 2^(-prec/2) for LinearPlusTan).
BigReal halfplane_eval(const HalfPlaneConjugated& g, const BigReal& x);

/// Boundary points where f* is undefined. `limit` bounds how many of an
/// infinite family (poles of tan, preimage branches) are listed on each side.
std::vector<CirclePoint> singular_set(const InnerFunction& f, Bits prec, int limit = 16);

/// Solutions of f*(zeta) = target, at most `limit` branches per side for
/// infinite-to-one maps.
std::vector<CirclePoint> boundary_preimages(const InnerFunction& f, const CirclePoint& target, int limit = 16);

}  // namespace innerdyn::inner
