#include <gtest/gtest.h>

#include "innerdyn/errors.hpp"
#include "innerdyn/inner/estimators.hpp"
#include "innerdyn/inner/inner_function.hpp"
#include "innerdyn/inner/iteration.hpp"
#include "innerdyn/inner/regions.hpp"
#include "innerdyn/moebius/automorphism.hpp"
#include "innerdyn/moebius/cayley.hpp"
#include "innerdyn/numerics/sampling.hpp"

namespace innerdyn::inner {
namespace {

using moebius::Cayley;
using num::uniform_unit;

constexpr Bits kPrec = 256;
const PrecisionPolicy kPolicy{256, 4096, 64};

BigReal dec(const char* s, Bits prec = kPrec) { return BigReal::parse(s, prec); }
BigReal tiny(long e, Bits prec = kPrec) { return BigReal::pow2(-e, prec); }

InnerFunction automorphism() { return InnerFunction::automorphism(dec("0.5")); }
InnerFunction rational2() { return InnerFunction::rational2(BigReal(2L, kPrec)); }
InnerFunction linear_plus_tan() { return InnerFunction::linear_plus_tan(BigReal(2L, kPrec)); }
InnerFunction blaschke() {
  return InnerFunction::blaschke({BigComplex(kPrec), BigComplex(dec("0.3"), dec("0.2")), BigComplex(dec("-0.5"))},
                                 CirclePoint(dec("0.7")));
}
InnerFunction atomic() { return InnerFunction::atomic_singular(BigReal(1L, kPrec), CirclePoint(kPrec)); }

std::vector<InnerFunction> zoo() {
  return {automorphism(), rational2(), linear_plus_tan(), blaschke(), atomic(),
          InnerFunction::compose(automorphism(), blaschke())};
}

BigComplex random_disk_point(std::uint64_t seed, std::uint64_t i, const BigReal& max_modulus) {
  const BigReal r = max_modulus * num::sqrt(uniform_unit({seed, i, 1}, kPrec));
  return BigComplex::polar(r, BigReal::two_pi(kPrec) * uniform_unit({seed, i, 2}, kPrec));
}

TEST(EvalInterior, AutomorphismAtZero) {
  EXPECT_EQ(eval_interior(automorphism(), BigComplex(kPrec)), BigComplex(dec("0.5")));
}

TEST(EvalInterior, Rational2AtZeroIsHalf) {
  // C^-1(0) = i, F(i) = 3i, C(3i) = 1/2
  EXPECT_LT(abs(eval_interior(rational2(), BigComplex(kPrec)) - BigComplex(dec("0.5"))), tiny(250));
}

TEST(EvalInterior, AtomicSingularAtZero) {
  const BigComplex v = eval_interior(atomic(), BigComplex(kPrec));
  EXPECT_LT(abs(v.re() - num::exp(BigReal(-1L, kPrec))), tiny(250));
  EXPECT_LT(abs(v.im()), tiny(250));
}

TEST(EvalInterior, RejectsPointsOffTheDisk) {
  EXPECT_THROW(eval_interior(automorphism(), BigComplex(BigReal(1L, kPrec))), DomainError);
}

TEST(EvalInterior, EveryVariantMapsDiskIntoDisk) {
  for (const InnerFunction& f : zoo()) {
    for (std::uint64_t i = 0; i < 100; ++i) {
      const BigComplex z = random_disk_point(81, i, dec("0.999"));
      EXPECT_LT(num::norm(eval_interior(f, z)), 1L) << f.describe();
    }
  }
}

TEST(EvalInterior, SchwarzPick) {
  for (const InnerFunction& f : zoo()) {
    for (std::uint64_t i = 0; i < 50; ++i) {
      const BigComplex z = random_disk_point(82, i, dec("0.99"));
      const BigComplex w = random_disk_point(83, i, dec("0.99"));
      const BigReal before = moebius::pseudo_hyperbolic_distance(z, w);
      const BigReal after = moebius::pseudo_hyperbolic_distance(eval_interior(f, z), eval_interior(f, w));
      EXPECT_LE(after, before + tiny(200)) << f.describe();
    }
  }
}

TEST(EvalBoundary, AutomorphismFixedPoints) {
  EXPECT_EQ(eval_boundary(automorphism(), CirclePoint(kPrec)), CirclePoint(kPrec));
  const CirclePoint minus_one(BigReal::pi(kPrec));
  EXPECT_LT(num::chordal_distance(eval_boundary(automorphism(), minus_one), minus_one), tiny(250));
}

TEST(EvalBoundary, Rational2FixesMinusI) {
  const CirclePoint minus_i = Cayley::real_to_circle(BigReal(1L, kPrec));
  EXPECT_LT(num::chordal_distance(minus_i, CirclePoint(BigReal::pi(kPrec) * 3L / 2L)), tiny(250));
  EXPECT_LT(num::chordal_distance(eval_boundary(rational2(), minus_i), minus_i), tiny(240));
}

TEST(EvalBoundary, AgreesWithRadialLimit) {
  const BigReal r = 1L - tiny(120);
  for (const InnerFunction& f : zoo()) {
    for (std::uint64_t i = 0; i < 20; ++i) {
      const CirclePoint zeta = num::boundary_sample(84, i, kPrec);
      CirclePoint boundary(kPrec);
      try {
        boundary = eval_boundary(f, zeta);
      } catch (const SingularPoint&) {
        continue;
      }
      const BigComplex radial = eval_interior(f, zeta.embed() * r);
      EXPECT_LT(num::chordal_distance(boundary, radial), dec("1e-20")) << f.describe();
    }
  }
}

TEST(EvalBoundary, SingularPointsAreRejected) {
  EXPECT_THROW(eval_boundary(atomic(), CirclePoint(kPrec)), SingularPoint);
  EXPECT_THROW(eval_boundary(linear_plus_tan(), CirclePoint(kPrec)), SingularPoint);
  const CirclePoint pole = Cayley::real_to_circle(num::ldexp(BigReal::pi(kPrec), -1));
  EXPECT_THROW(eval_boundary(linear_plus_tan(), pole), SingularPoint);
  EXPECT_NO_THROW(eval_boundary(rational2(), CirclePoint(kPrec)));
}

TEST(SingularSet, PerVariant) {
  EXPECT_TRUE(singular_set(automorphism(), kPrec).empty());
  EXPECT_TRUE(singular_set(blaschke(), kPrec).empty());
  EXPECT_EQ(singular_set(atomic(), kPrec).size(), 1u);
  const auto lpt = singular_set(linear_plus_tan(), kPrec, 4);
  EXPECT_EQ(lpt.size(), 9u);
  for (const CirclePoint& s : lpt) EXPECT_THROW(eval_boundary(linear_plus_tan(), s), SingularPoint);
  const auto comp = singular_set(InnerFunction::compose(atomic(), automorphism()), kPrec);
  ASSERT_EQ(comp.size(), 1u);
  EXPECT_THROW(eval_boundary(InnerFunction::compose(atomic(), automorphism()), comp[0]), SingularPoint);
}

TEST(BoundaryPreimages, MapBackToTarget) {
  const CirclePoint target(dec("2.2"));
  for (const InnerFunction& f : zoo()) {
    const auto pre = boundary_preimages(f, target, 3);
    EXPECT_FALSE(pre.empty()) << f.describe();
    for (const CirclePoint& q : pre) {
      EXPECT_LT(num::chordal_distance(eval_boundary(f, q), target), tiny(150)) << f.describe();
    }
  }
  EXPECT_EQ(boundary_preimages(blaschke(), target).size(), 3u);
  EXPECT_EQ(boundary_preimages(rational2(), target).size(), 2u);
}

TEST(DenjoyWolff, AutomorphismIsOne) {
  const CirclePoint p = denjoy_wolff(automorphism(), kPolicy, dec("1e-20"));
  EXPECT_LT(num::chordal_distance(p, CirclePoint(kPrec)), dec("1e-20"));
}

TEST(DenjoyWolff, HalfPlaneExamplesAreOne) {
  for (const InnerFunction& f : {rational2(), linear_plus_tan()}) {
    const CirclePoint p = denjoy_wolff(f, kPolicy, dec("1e-20"));
    EXPECT_LT(num::chordal_distance(p, CirclePoint(kPrec)), dec("1e-20")) << f.describe();
  }
}

TEST(DenjoyWolff, RotatedBlaschkeFindsBoundaryPoint) {
  // z -> conj-rotated automorphism moves the DW point to e^{i 0.9}
  const auto m = moebius::DiskAutomorphism(BigComplex::polar(dec("0.5"), dec("0.9")), CirclePoint(kPrec));
  const InnerFunction f = InnerFunction::blaschke({m.inverse().apply(BigComplex(kPrec))}, CirclePoint(kPrec));
  const CirclePoint p = denjoy_wolff(f, kPolicy, dec("1e-20"));
  EXPECT_LT(num::chordal_distance(eval_boundary(f, p), p), dec("1e-15"));
}

TEST(DenjoyWolff, InteriorFixedPointIsReported) {
  EXPECT_THROW(denjoy_wolff(atomic(), kPolicy, dec("1e-20")), NotBoundaryConverging);
}

TEST(AngularDerivative, AutomorphismIsOneThird) {
  const CirclePoint p(kPrec);
  const BigReal third = BigReal(1L, kPrec) / 3L;
  for (const auto method : {AngularMethod::Radial, AngularMethod::OrbitRatio}) {
    EXPECT_LT(abs(angular_derivative(automorphism(), p, method, kPolicy) - third), dec("1e-12"));
  }
}

TEST(AngularDerivative, HalfPlaneExamplesAreHalf) {
  const CirclePoint p(kPrec);
  for (const InnerFunction& f : {rational2(), linear_plus_tan()}) {
    for (const auto method : {AngularMethod::Radial, AngularMethod::OrbitRatio}) {
      const BigReal alpha = angular_derivative(f, p, method, kPolicy);
      EXPECT_LT(abs(alpha - dec("0.5")), dec("1e-12")) << f.describe();
      EXPECT_GT(alpha, 0L);
      EXPECT_LT(alpha, 1L);
    }
  }
}

TEST(AngularDerivative, MethodsAgree) {
  const CirclePoint p(kPrec);
  for (const InnerFunction& f : {automorphism(), rational2()}) {
    const BigReal radial = angular_derivative(f, p, AngularMethod::Radial, kPolicy);
    const BigReal ratio = angular_derivative(f, p, AngularMethod::OrbitRatio, kPolicy);
    EXPECT_LT(abs(radial - ratio), dec("1e-6"));
  }
}

TEST(Stolz, ConstructionConstraints) {
  EXPECT_THROW(StolzAngle(CirclePoint(kPrec), dec("1.6"), dec("0.1")), DomainError);
  EXPECT_THROW(StolzAngle(CirclePoint(kPrec), dec("0.5"), dec("1.8")), DomainError);
  EXPECT_NO_THROW(StolzAngle(CirclePoint(kPrec), dec("0.5"), dec("1.7")));
}

TEST(Stolz, OriginNeedsRadiusAboveOne) {
  const StolzAngle narrow(CirclePoint(kPrec), dec("1.2"), dec("0.7"));
  EXPECT_FALSE(in_stolz(BigComplex(kPrec), narrow));
}

TEST(Stolz, RadialApproachIsInside) {
  const CirclePoint a(dec("2.0"));
  const StolzAngle s(a, dec("0.1"), dec("0.5"));
  for (const char* r : {"0.8", "0.9", "0.99", "0.999999"}) EXPECT_TRUE(in_stolz(a.embed() * dec(r), s));
}

TEST(Stolz, TangentialApproachIsOutside) {
  const StolzAngle s(CirclePoint(kPrec), dec("0.3"), dec("1.0"));
  // z_k = (1 - t^2) e^{i t}: |1 - z| ~ t while 1 - |z| ~ t^2
  for (const char* t : {"0.1", "0.01", "0.001"}) {
    const BigComplex z = BigComplex::polar(1L - dec(t) * dec(t), dec(t));
    EXPECT_FALSE(in_stolz(z, s)) << t;
  }
}

TEST(Stolz, OrbitsConvergeNonTangentially) {
  const BigReal quarter_pi = BigReal::pi(kPrec) / 4L;
  const StolzAngle s(CirclePoint(kPrec), quarter_pi, dec("1.4"));
  for (const InnerFunction& f : {automorphism(), rational2(), linear_plus_tan()}) {
    InteriorIterate it = interior_origin(f, kPrec);
    for (int n = 1; n <= 60; ++n) {
      it = interior_step(f, it);
      if (n >= 10) EXPECT_TRUE(in_stolz(it.z, s)) << f.describe() << " n=" << n;
    }
  }
}

TEST(Wolff, MembershipExamples) {
  const CirclePoint p(dec("1.1"));
  EXPECT_TRUE(in_wolff(BigComplex(kPrec), WolffRegion(p, BigReal(2L, kPrec))));
  EXPECT_FALSE(in_wolff(BigComplex(kPrec), WolffRegion(p, dec("0.5"))));
  // |p - 0|^2 = eta (1 - 0): boundary of the region, excluded
  EXPECT_FALSE(in_wolff(BigComplex(kPrec), WolffRegion(p, BigReal(1L, kPrec))));
}

TEST(Wolff, RegionsAreNested) {
  const CirclePoint p(dec("0.4"));
  for (std::uint64_t i = 0; i < 200; ++i) {
    const BigComplex z = random_disk_point(91, i, dec("0.999"));
    if (in_wolff(z, WolffRegion(p, dec("1.5")))) EXPECT_TRUE(in_wolff(z, WolffRegion(p, dec("2.5"))));
  }
}

TEST(Wolff, SamplesLieInRegion) {
  const WolffRegion h(CirclePoint(dec("3")), dec("0.7"));
  for (std::uint64_t i = 0; i < 200; ++i) EXPECT_TRUE(in_wolff(sample_wolff(h, 5, i, kPrec), h));
}

TEST(Wolff, ImagesContractByAlpha) {
  const CirclePoint p(kPrec);
  const BigReal slack = 1L + tiny(40);
  const std::vector<std::pair<InnerFunction, BigReal>> cases{
      {automorphism(), BigReal(1L, kPrec) / 3L}, {rational2(), dec("0.5")}, {linear_plus_tan(), dec("0.5")}};
  for (const auto& [f, alpha] : cases) {
    for (const char* eta : {"1.5", "2", "5"}) {
      const WolffRegion h(p, dec(eta));
      const WolffRegion image_region(p, alpha * dec(eta) * slack);
      for (std::uint64_t i = 0; i < 100; ++i) {
        EXPECT_TRUE(in_wolff(eval_interior(f, sample_wolff(h, 6, i, kPrec)), image_region)) << f.describe();
      }
    }
  }
}

}  // namespace
}  // namespace innerdyn::inner
