#include <gtest/gtest.h>

#include <atomic>
#include <cmath>

#include "innerdyn/dynamics/annulus.hpp"
#include "innerdyn/dynamics/orbit.hpp"
#include "innerdyn/dynamics/parallel.hpp"
#include "innerdyn/dynamics/rate.hpp"
#include "innerdyn/dynamics/theorem_a.hpp"
#include "innerdyn/errors.hpp"
#include "innerdyn/moebius/cayley.hpp"
#include "innerdyn/numerics/sampling.hpp"

namespace innerdyn::dynamics {
namespace {

using moebius::Cayley;

constexpr Bits kPrec = 256;
const PrecisionPolicy kPolicy{256, 4096, 64};

BigReal dec(const char* s, Bits prec = kPrec) { return BigReal::parse(s, prec); }
BigReal tiny(long e, Bits prec = kPrec) { return BigReal::pow2(-e, prec); }

InnerFunction automorphism() { return InnerFunction::automorphism(dec("0.5")); }
InnerFunction rational2() { return InnerFunction::rational2(BigReal(2L, kPrec)); }
InnerFunction linear_plus_tan() { return InnerFunction::linear_plus_tan(BigReal(2L, kPrec)); }

const CirclePoint kOne(kPrec);

TEST(InteriorOrbit, AutomorphismMatchesTanhClosedForm) {
  const OrbitRecord r = interior_orbit(automorphism(), 5, kPolicy, kOne);
  ASSERT_TRUE(r.complete());
  ASSERT_EQ(r.points.size(), 6u);
  EXPECT_EQ(std::get<BigComplex>(r.points[0].value), BigComplex(kPrec));
  const Bits prec = 512;
  const BigReal s = num::atanh(dec("0.5", prec));
  for (long n = 1; n <= 5; ++n) {
    const BigReal oracle = num::tanh(s * n);
    EXPECT_LT(abs(std::get<BigComplex>(r.points[static_cast<std::size_t>(n)].value).re() - oracle), tiny(240));
    EXPECT_LT(abs(r.points[static_cast<std::size_t>(n)].distance_to_p - (1L - oracle)), tiny(240));
  }
  EXPECT_LT(abs(std::get<BigComplex>(r.points[2].value).re() - dec("0.8")), tiny(240));
}

TEST(InteriorOrbit, RejectsEmptyIteration) {
  EXPECT_THROW(interior_orbit(automorphism(), 0, kPolicy, kOne), DomainError);
}

TEST(InteriorOrbit, Rational2DistancesFollowHalfPlaneOracle) {
  const OrbitRecord r = interior_orbit(rational2(), 60, kPolicy, kOne);
  ASSERT_TRUE(r.complete());
  // w_n = i y_n with y_{n+1} = 2 y_n + 1/y_n, |1 - C(w_n)| = 2/(y_n + 1)
  BigReal y(1L, 1024);
  for (std::size_t n = 0; n <= 60; ++n) {
    const BigReal oracle = 2L / (y + 1L);
    EXPECT_LT(abs(r.points[n].distance_to_p / oracle - 1L), tiny(180)) << n;
    y = y * 2L + 1L / y;
  }
}

TEST(InteriorOrbit, DistancesEventuallyDecrease) {
  for (const InnerFunction& f : {automorphism(), rational2(), linear_plus_tan()}) {
    const OrbitRecord r = interior_orbit(f, 40, kPolicy, kOne);
    for (std::size_t n = 5; n < 40; ++n) EXPECT_LT(r.points[n + 1].distance_to_p, r.points[n].distance_to_p);
  }
}

TEST(BoundaryOrbit, RepellingFixedPointIsConstant) {
  const CirclePoint minus_one(BigReal::pi(kPrec));
  const OrbitRecord r = boundary_orbit(automorphism(), minus_one, 20, kPolicy, kOne);
  ASSERT_TRUE(r.complete());
  for (const OrbitPoint& pt : r.points) {
    EXPECT_LT(num::chordal_distance(std::get<CirclePoint>(pt.value), minus_one), tiny(200));
  }
}

TEST(BoundaryOrbit, AutomorphismContractsAtOneThird) {
  const CirclePoint i_point(BigReal::pi(kPrec) / 2L);
  const OrbitRecord r = boundary_orbit(automorphism(), i_point, 40, kPolicy, kOne);
  ASSERT_TRUE(r.complete());
  // oracle: iterate (z + 1/2)/(1 + z/2) on the complex embedding at 1024 bits
  BigComplex z = i_point.rounded(1024).embed();
  const BigComplex half(dec("0.5", 1024));
  for (std::size_t n = 0; n <= 40; ++n) {
    const BigReal oracle = abs(z - BigComplex(BigReal(1L, 1024)));
    EXPECT_LT(abs(r.points[n].distance_to_p / oracle - 1L), tiny(100)) << n;
    z = (z + half) / (half * z + 1L);
  }
  const BigReal ratio = r.points[40].distance_to_p / r.points[39].distance_to_p;
  EXPECT_LT(abs(ratio - BigReal(1L, kPrec) / 3L), dec("1e-15"));
}

TEST(BoundaryOrbit, BoundaryAndInteriorShareTheRate) {
  const OrbitRecord interior = interior_orbit(automorphism(), 40, kPolicy, kOne);
  const OrbitRecord boundary = boundary_orbit(automorphism(), num::boundary_sample(3, 0, kPrec), 40, kPolicy, kOne);
  const BigReal a = interior.points[40].distance_to_p / interior.points[39].distance_to_p;
  const BigReal b = boundary.points[40].distance_to_p / boundary.points[39].distance_to_p;
  EXPECT_LT(abs(a - b), dec("1e-15"));
}

TEST(BoundaryOrbit, Rational2FollowsHalfPlaneIteration) {
  const CirclePoint start = Cayley::real_to_circle(BigReal(5L, kPrec));
  const OrbitRecord r = boundary_orbit(rational2(), start, 50, kPolicy, kOne);
  ASSERT_TRUE(r.complete());
  BigReal x(5L, 2048);
  for (std::size_t n = 0; n <= 50; ++n) {
    const BigReal oracle = 2L / num::sqrt(x * x + 1L);
    EXPECT_LT(abs(r.points[n].distance_to_p / oracle - 1L), tiny(100)) << n;
    x = x * 2L - 1L / x;
  }
}

TEST(BoundaryOrbit, SingularHitTruncatesRecord) {
  const CirclePoint pole = Cayley::real_to_circle(num::ldexp(BigReal::pi(kPrec), -1));
  const OrbitRecord direct = boundary_orbit(linear_plus_tan(), pole, 10, kPolicy, kOne);
  ASSERT_TRUE(direct.truncated);
  EXPECT_EQ(direct.truncated->reason, TruncationReason::SingularPoint);
  EXPECT_EQ(direct.truncated->at, 1);
  EXPECT_THROW(direct.require_complete(), SingularPoint);

  const auto pre = inner::boundary_preimages(linear_plus_tan(), pole, 1);
  const OrbitRecord later = boundary_orbit(linear_plus_tan(), pre[0], 10, kPolicy, kOne);
  ASSERT_TRUE(later.truncated);
  EXPECT_EQ(later.truncated->at, 2);
  EXPECT_EQ(later.points.size(), 2u);

  EXPECT_TRUE(boundary_orbit(rational2(), kOne, 5, kPolicy, kOne).truncated);
}

TEST(BoundaryOrbit, PrecisionExhaustionTruncatesRecord) {
  const OrbitRecord r =
      boundary_orbit(linear_plus_tan(), num::boundary_sample(1, 3, 64), 200, PrecisionPolicy{64, 128, 64}, kOne);
  ASSERT_TRUE(r.truncated);
  EXPECT_EQ(r.truncated->reason, TruncationReason::PrecisionExhausted);
  EXPECT_LT(r.points.size(), 201u);
  EXPECT_THROW(r.require_complete(), PrecisionExhausted);
}

TEST(RateBounds, AutomorphismConstantsFromClosedForm) {
  const OrbitRecord r = interior_orbit(automorphism(), 60, PrecisionPolicy{512, 4096, 64}, kOne);
  const BigReal third = BigReal(1L, 512) / 3L;
  const RateReport rep = verify_rate_bounds(r, third, BigReal(512), 10);
  EXPECT_TRUE(rep.satisfied);
  // d_n / 3^-n = 2 * 3^n / (3^n + 1) increases towards 2
  EXPECT_LT(abs(rep.c_upper - BigReal(2L, 512) * num::pow(BigReal(3L, 512), 60L) / (num::pow(BigReal(3L, 512), 60L) + 1L)),
            tiny(200));
  EXPECT_EQ(rep.c_lower, 1L);
  EXPECT_EQ(rep.n_min, 10);
  EXPECT_EQ(rep.n_max, 60);
}

TEST(RateBounds, WindowBeyondOrbitIsTooShort) {
  const OrbitRecord r = interior_orbit(automorphism(), 20, kPolicy, kOne);
  EXPECT_THROW(verify_rate_bounds(r, BigReal(1L, kPrec) / 3L, BigReal(kPrec), 15), WindowTooShort);
}

TEST(RateBounds, HalfPlaneExamplesHoldOnWindow) {
  for (const InnerFunction& f : {rational2(), linear_plus_tan()}) {
    const OrbitRecord r = interior_orbit(f, 60, kPolicy, kOne);
    const RateReport rep = verify_rate_bounds(r, dec("0.5"), dec("0.5") * dec("0.5") / 3L, 10);
    EXPECT_TRUE(rep.satisfied) << f.describe();
  }
}

TEST(Summability, AutomorphismRatioIsOneThird) {
  const OrbitRecord r = interior_orbit(automorphism(), 60, kPolicy, kOne);
  const SummabilityResult s = summability_check(r, 60);
  EXPECT_TRUE(s.geometric_tail_certificate);
  EXPECT_LT(abs(s.ratio_bound - BigReal(1L, kPrec) / 3L), dec("1e-6"));
  EXPECT_LT(abs(s.terms[1] - dec("0.5")), tiny(240));
  EXPECT_LT(abs(s.terms[2] - dec("0.2")), tiny(240));
  // 1 + sum of 2/(3^n + 1) for n >= 1, summed independently in doubles is enough for 1e-14
  double oracle = 1.0;  // n = 0 term
  for (int n = 1; n <= 60; ++n) oracle += 2.0 / (std::pow(3.0, n) + 1.0);
  EXPECT_NEAR(s.partial_sums[60].to_double(), oracle, 1e-14);
}

TEST(Summability, ConstantModulusHasNoCertificate) {
  OrbitRecord r;
  for (int n = 0; n <= 40; ++n) {
    r.points.push_back({BigComplex(dec("0.5")), dec("0.5"), dec("0.5"), kPrec});
  }
  EXPECT_FALSE(summability_check(r, 40).geometric_tail_certificate);
}

TEST(Summability, Rational2RatioIsOneHalf) {
  const OrbitRecord r = interior_orbit(rational2(), 60, kPolicy, kOne);
  const SummabilityResult s = summability_check(r, 60);
  EXPECT_TRUE(s.geometric_tail_certificate);
  EXPECT_LT(abs(s.ratio_bound - dec("0.5")), dec("1e-6"));
}

TEST(Annulus, Examples) {
  const AnnulusSpec spec(kOne, BigReal(1L, kPrec) / 3L, dec("0.5"));
  EXPECT_FALSE(in_annulus(spec, 4, kOne));
  EXPECT_FALSE(in_annulus(spec, 4, CirclePoint(BigReal::pi(kPrec))));
  EXPECT_TRUE(in_annulus(spec, 4, BigReal(1L, kPrec) / 27L));
  EXPECT_LT(abs(spec.inner_radius(4, kPrec) - BigReal(1L, kPrec) / 729L), tiny(240));
  EXPECT_LT(abs(spec.outer_radius(4, kPrec) - BigReal(1L, kPrec) / 9L), tiny(240));
}

TEST(Annulus, NestedInEpsilon) {
  const BigReal alpha = dec("0.4");
  const AnnulusSpec narrow(kOne, alpha, dec("0.3"));
  const AnnulusSpec wide(kOne, alpha, dec("0.6"));
  for (std::uint64_t i = 0; i < 500; ++i) {
    const CirclePoint z = num::boundary_sample(17, i, kPrec);
    const int n = 1 + static_cast<int>(i % 7);
    if (in_annulus(narrow, n, z)) EXPECT_TRUE(in_annulus(wide, n, z));
  }
}

TEST(Annulus, RadiiOrdered) {
  const AnnulusSpec spec(kOne, dec("0.9"), dec("0.01"));
  for (int n = 1; n < 50; ++n) EXPECT_LT(spec.inner_radius(n, kPrec), spec.outer_radius(n, kPrec));
}

TEST(Parallel, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(Parallel, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(100, 3, [](std::size_t i) {
                 if (i == 42) throw DomainError("boom");
               }),
               DomainError);
}

TheoremAConfig small_config(int samples, int n_enter, int n_max) {
  TheoremAConfig c;
  c.epsilon = dec("0.5");
  c.samples = static_cast<std::size_t>(samples);
  c.seed = 1;
  c.n_enter = n_enter;
  c.n_max = n_max;
  c.policy = kPolicy;
  return c;
}

TEST(TheoremA, AutomorphismContainsAlmostEverySample) {
  TheoremAConfig c = small_config(100, 10, 40);
  const TheoremAReport rep = theorem_a_experiment(automorphism(), c);
  EXPECT_TRUE(rep.healthy);
  EXPECT_GE(rep.eventually_fraction(), dec("0.97"));
  EXPECT_LT(abs(rep.alpha - BigReal(1L, kPrec) / 3L), dec("1e-12"));
  EXPECT_LT(num::chordal_distance(rep.p, kOne), dec("1e-15"));
}

TEST(TheoremA, DeterministicAcrossWorkerCounts) {
  TheoremAConfig c = small_config(40, 10, 30);
  c.alpha = dec("0.5");
  c.p = kOne;
  c.workers = 1;
  const TheoremAReport one = theorem_a_experiment(rational2(), c);
  c.workers = 3;
  const TheoremAReport three = theorem_a_experiment(rational2(), c);
  EXPECT_EQ(one.containment_counts, three.containment_counts);
  EXPECT_EQ(one.eventually_count, three.eventually_count);
  for (std::size_t i = 0; i < one.outcomes.size(); ++i) {
    EXPECT_EQ(one.outcomes[i].inside, three.outcomes[i].inside);
    EXPECT_EQ(one.outcomes[i].bits_used, three.outcomes[i].bits_used);
  }
}

TEST(TheoremA, WiderAnnulusContainsMore) {
  TheoremAConfig c = small_config(40, 10, 30);
  c.alpha = dec("0.5");
  c.p = kOne;
  const TheoremAReport half = theorem_a_experiment(rational2(), c);
  c.epsilon = dec("0.999");
  const TheoremAReport wide = theorem_a_experiment(rational2(), c);
  for (std::size_t k = 0; k < half.containment_counts.size(); ++k) {
    EXPECT_GE(wide.containment_counts[k], half.containment_counts[k]);
  }
}

TEST(TheoremA, LooserToleranceKeepsAgreedVerdicts) {
  TheoremAConfig c = small_config(30, 10, 30);
  c.alpha = dec("0.5");
  c.p = kOne;
  const TheoremAReport strict = theorem_a_experiment(rational2(), c);
  c.policy.agreement_tol_bits = 32;
  const TheoremAReport loose = theorem_a_experiment(rational2(), c);
  for (std::size_t i = 0; i < strict.outcomes.size(); ++i) {
    if (strict.outcomes[i].status == SampleStatus::Determinate) {
      EXPECT_EQ(strict.outcomes[i].inside, loose.outcomes[i].inside);
    }
  }
}

TEST(TheoremA, InvalidWindowRejected) {
  EXPECT_THROW(theorem_a_experiment(automorphism(), small_config(10, 20, 20)), DomainError);
}

}  // namespace
}  // namespace innerdyn::dynamics
