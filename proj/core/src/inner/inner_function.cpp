#include "innerdyn/inner/inner_function.hpp"

#include <algorithm>
#include <functional>

#include "innerdyn/errors.hpp"
#include "innerdyn/moebius/cayley.hpp"

namespace innerdyn::inner {

using moebius::Cayley;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

BigReal tolerance(Bits prec) { return BigReal::pow2(-prec / 2, prec); }

bool near(const CirclePoint& a, const CirclePoint& b, Bits prec) {
  return num::chordal_distance(a.rounded(prec), b.rounded(prec)) < tolerance(prec);
}

// Root of an increasing function on (lo, hi), which must change sign there.
BigReal bisect(const std::function<BigReal(const BigReal&)>& g, BigReal lo, BigReal hi) {
  const Bits prec = std::max(lo.prec(), hi.prec());
  for (Bits i = 0; i < prec + 8; ++i) {
    BigReal mid = num::ldexp(lo + hi, -1);
    if (mid == lo || mid == hi) break;
    if (g(mid) < 0L) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return num::ldexp(lo + hi, -1);
}

// Continuous lift of the boundary argument of a Blaschke product; increases by 2*pi*degree per turn.
BigReal blaschke_lifted_angle(const BlaschkeProduct& b, const BigReal& phi) {
  const Bits prec = phi.prec();
  const BigComplex zeta = CirclePoint(phi).embed();
  BigReal total = b.rotation.angle().rounded(prec);
  for (const BigComplex& a0 : b.zeros) {
    const BigComplex a = a0.rounded(prec);
    total += phi;
    if (a.re().is_zero() && a.im().is_zero()) continue;
    total += BigReal::pi(prec) - num::arg(a) - num::ldexp(num::arg(1L - a.conj() * zeta), 1);
  }
  return total;
}

std::string short_string(const BigReal& x) { return x.to_string(12); }

}  // namespace

InnerFunction InnerFunction::automorphism(const BigReal& a) {
  if (a <= 0L || a >= 1L) throw DomainError("automorphism parameter a must lie in (0, 1)");
  return InnerFunction(Automorphism{moebius::DiskAutomorphism(BigComplex(a), CirclePoint(a.prec()))});
}

InnerFunction InnerFunction::blaschke(std::vector<BigComplex> zeros, CirclePoint rotation) {
  if (zeros.empty()) throw DomainError("Blaschke product needs at least one zero");
  for (const BigComplex& a : zeros) {
    if (num::norm(a) >= 1L) throw DomainError("Blaschke zeros must satisfy |a| < 1");
  }
  return InnerFunction(BlaschkeProduct{std::move(zeros), std::move(rotation)});
}

InnerFunction InnerFunction::atomic_singular(const BigReal& mass, CirclePoint singularity) {
  if (mass <= 0L) throw DomainError("atomic singular mass must be positive");
  return InnerFunction(AtomicSingular{mass, std::move(singularity)});
}

InnerFunction InnerFunction::rational2(const BigReal& lambda) {
  if (lambda <= 1L) throw DomainError("Rational2 requires lambda > 1");
  return InnerFunction(HalfPlaneConjugated{HalfPlaneMap::Rational2, lambda});
}

InnerFunction InnerFunction::linear_plus_tan(const BigReal& lambda) {
  if (lambda <= 1L) throw DomainError("LinearPlusTan requires lambda > 1");
  return InnerFunction(HalfPlaneConjugated{HalfPlaneMap::LinearPlusTan, lambda});
}

InnerFunction InnerFunction::compose(InnerFunction outer, InnerFunction inner) {
  return InnerFunction(Composition{std::make_shared<const InnerFunction>(std::move(outer)),
                                   std::make_shared<const InnerFunction>(std::move(inner))});
}

std::string InnerFunction::describe() const {
  return std::visit(
      Overloaded{
          [](const Automorphism& m) { return "automorphism(a=" + short_string(m.map.c().re()) + ")"; },
          [](const BlaschkeProduct& b) { return "blaschke(degree=" + std::to_string(b.zeros.size()) + ")"; },
          [](const AtomicSingular& s) {
            return "atomic_singular(t=" + short_string(s.mass) + ", sigma=" + short_string(s.singularity.angle()) +
                   ")";
          },
          [](const HalfPlaneConjugated& g) {
            return std::string(g.map == HalfPlaneMap::Rational2 ? "rational2" : "linear_plus_tan") +
                   "(lambda=" + short_string(g.lambda) + ")";
          },
          [](const Composition& c) { return "compose(" + c.outer->describe() + ", " + c.inner->describe() + ")"; },
      },
      variant_);
}

BigComplex halfplane_eval(const HalfPlaneConjugated& g, const BigComplex& w) {
  const BigReal lambda = g.lambda.rounded(w.prec());
  if (g.map == HalfPlaneMap::Rational2) return lambda * w - BigComplex(BigReal(1L, w.prec())) / w;
  return lambda * w + num::tan(w);
}

BigReal halfplane_eval(const HalfPlaneConjugated& g, const BigReal& x) {
  const BigReal lambda = g.lambda.rounded(x.prec());
  if (g.map == HalfPlaneMap::Rational2) {
    if (x.is_zero()) throw SingularPoint("Rational2 boundary orbit reached the pole x = 0");
    return lambda * x - 1L / x;
  }
  if (num::abs(num::cos(x)) < tolerance(x.prec())) throw SingularPoint("LinearPlusTan boundary point at a pole of tan");
  return lambda * x + num::tan(x);
}

BigComplex eval_interior(const InnerFunction& f, const BigComplex& z) {
  if (num::norm(z) >= 1L) throw DomainError("eval_interior requires |z| < 1");
  const Bits prec = z.prec();
  return std::visit(
      Overloaded{
          [&](const Automorphism& m) {
            return moebius::DiskAutomorphism(m.map.c().rounded(prec), m.map.u().rounded(prec)).apply(z);
          },
          [&](const BlaschkeProduct& b) {
            BigComplex acc = b.rotation.rounded(prec).embed();
            for (const BigComplex& a0 : b.zeros) {
              const BigComplex a = a0.rounded(prec);
              if (a.re().is_zero() && a.im().is_zero()) {
                acc = acc * z;
                continue;
              }
              const BigComplex unit = BigComplex(num::abs(a)) / a;
              acc = acc * unit * (a - z) / (1L - a.conj() * z);
            }
            return acc;
          },
          [&](const AtomicSingular& s) {
            const BigComplex sigma = s.singularity.rounded(prec).embed();
            return num::exp((sigma + z) / (sigma - z) * (-s.mass.rounded(prec)));
          },
          [&](const HalfPlaneConjugated& g) { return Cayley::to_disk(halfplane_eval(g, Cayley::to_halfplane(z))); },
          [&](const Composition& c) { return eval_interior(*c.outer, eval_interior(*c.inner, z)); },
      },
      f.variant());
}

CirclePoint eval_boundary(const InnerFunction& f, const CirclePoint& zeta) {
  const Bits prec = zeta.prec();
  return std::visit(
      Overloaded{
          [&](const Automorphism& m) {
            return moebius::DiskAutomorphism(m.map.c().rounded(prec), m.map.u().rounded(prec)).apply(zeta);
          },
          [&](const BlaschkeProduct& b) { return CirclePoint(blaschke_lifted_angle(b, zeta.angle())); },
          [&](const AtomicSingular& s) {
            if (near(zeta, s.singularity, prec)) throw SingularPoint("boundary point at the atomic singularity");
            const BigReal delta = zeta.angle() - s.singularity.angle().rounded(prec);
            return CirclePoint(-s.mass.rounded(prec) * num::cot(num::ldexp(delta, -1)));
          },
          [&](const HalfPlaneConjugated& g) {
            if (zeta.angle().is_zero()) {
              if (g.map == HalfPlaneMap::Rational2) return CirclePoint(prec);
              throw SingularPoint("LinearPlusTan is singular at 1");
            }
            if (g.map == HalfPlaneMap::LinearPlusTan && near(zeta, CirclePoint(prec), prec)) {
              throw SingularPoint("LinearPlusTan is singular at 1");
            }
            const BigReal x = Cayley::circle_to_real(zeta);
            if (g.map == HalfPlaneMap::Rational2 && x.is_zero()) return CirclePoint(prec);
            return Cayley::real_to_circle(halfplane_eval(g, x));
          },
          [&](const Composition& c) { return eval_boundary(*c.outer, eval_boundary(*c.inner, zeta)); },
      },
      f.variant());
}

std::vector<CirclePoint> singular_set(const InnerFunction& f, Bits prec, int limit) {
  return std::visit(
      Overloaded{
          [](const Automorphism&) { return std::vector<CirclePoint>{}; },
          [](const BlaschkeProduct&) { return std::vector<CirclePoint>{}; },
          [&](const AtomicSingular& s) { return std::vector<CirclePoint>{s.singularity.rounded(prec)}; },
          [&](const HalfPlaneConjugated& g) {
            std::vector<CirclePoint> out;
            if (g.map == HalfPlaneMap::Rational2) return out;
            out.emplace_back(prec);
            const BigReal pi = BigReal::pi(prec);
            for (long k = -limit; k < limit; ++k) {
              out.push_back(Cayley::real_to_circle(num::ldexp(pi, -1) + pi * k));
            }
            return out;
          },
          [&](const Composition& c) {
            std::vector<CirclePoint> out = singular_set(*c.inner, prec, limit);
            for (const CirclePoint& s : singular_set(*c.outer, prec, limit)) {
              for (CirclePoint& q : boundary_preimages(*c.inner, s, limit)) out.push_back(std::move(q));
            }
            return out;
          },
      },
      f.variant());
}

std::vector<CirclePoint> boundary_preimages(const InnerFunction& f, const CirclePoint& target, int limit) {
  const Bits prec = target.prec();
  const BigReal pi = BigReal::pi(prec);
  const BigReal two_pi = BigReal::two_pi(prec);
  return std::visit(
      Overloaded{
          [&](const Automorphism& m) {
            const moebius::DiskAutomorphism map(m.map.c().rounded(prec), m.map.u().rounded(prec));
            return std::vector<CirclePoint>{map.inverse().apply(target)};
          },
          [&](const BlaschkeProduct& b) {
            std::vector<CirclePoint> out;
            const BigReal zero(prec);
            const BigReal base = blaschke_lifted_angle(b, zero);
            // first lift of the target at or above the value at phi = 0
            BigReal t = target.angle() + two_pi * num::floor((base - target.angle()) / two_pi);
            if (t < base) t += two_pi;
            for (std::size_t k = 0; k < b.zeros.size(); ++k, t += two_pi) {
              out.emplace_back(
                  bisect([&](const BigReal& phi) { return blaschke_lifted_angle(b, phi) - t; }, zero, two_pi));
            }
            return out;
          },
          [&](const AtomicSingular& s) {
            std::vector<CirclePoint> out;
            const BigReal t = s.mass.rounded(prec);
            for (long k = -limit; k <= limit; ++k) {
              // -t cot(delta/2) = target + 2 pi k with delta/2 in (0, pi)
              const BigReal v = -(target.angle() + two_pi * k) / t;
              const BigReal half = num::ldexp(pi, -1) - num::atan(v);
              out.emplace_back(s.singularity.angle().rounded(prec) + num::ldexp(half, 1));
            }
            return out;
          },
          [&](const HalfPlaneConjugated& g) {
            std::vector<CirclePoint> out;
            const BigReal lambda = g.lambda.rounded(prec);
            if (g.map == HalfPlaneMap::Rational2) {
              if (target.angle().is_zero()) {
                out.emplace_back(prec);
                out.push_back(Cayley::real_to_circle(BigReal(prec)));
                return out;
              }
              const BigReal y = Cayley::circle_to_real(target);
              const BigReal root = num::sqrt(y * y + lambda * 4L);
              out.push_back(Cayley::real_to_circle((y - root) / (lambda * 2L)));
              out.push_back(Cayley::real_to_circle((y + root) / (lambda * 2L)));
              return out;
            }
            const BigReal half_pi = num::ldexp(pi, -1);
            if (target.angle().is_zero()) {
              for (long k = -limit; k < limit; ++k) out.push_back(Cayley::real_to_circle(half_pi + pi * k));
              return out;
            }
            const BigReal y = Cayley::circle_to_real(target);
            for (long k = -limit; k <= limit; ++k) {
              const BigReal x = bisect([&](const BigReal& u) { return lambda * u + num::tan(u) - y; },
                                       pi * k - half_pi, pi * k + half_pi);
              out.push_back(Cayley::real_to_circle(x));
            }
            return out;
          },
          [&](const Composition& c) {
            std::vector<CirclePoint> out;
            for (const CirclePoint& mid : boundary_preimages(*c.outer, target, limit)) {
              for (CirclePoint& q : boundary_preimages(*c.inner, mid, limit)) out.push_back(std::move(q));
            }
            return out;
          },
      },
      f.variant());
}

}  // namespace innerdyn::inner
