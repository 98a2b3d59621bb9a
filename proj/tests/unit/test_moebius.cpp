#include <gtest/gtest.h>

#include "innerdyn/errors.hpp"
#include "innerdyn/moebius/arc.hpp"
#include "innerdyn/moebius/automorphism.hpp"
#include "innerdyn/moebius/cayley.hpp"
#include "innerdyn/moebius/pullback.hpp"
#include "innerdyn/numerics/sampling.hpp"

namespace innerdyn::moebius {
namespace {

using num::uniform_unit;

constexpr Bits kPrec = 256;

BigReal dec(const char* s, Bits prec = kPrec) { return BigReal::parse(s, prec); }
BigReal tiny(long e, Bits prec = kPrec) { return BigReal::pow2(-e, prec); }

BigComplex random_disk_point(std::uint64_t seed, std::uint64_t i, const BigReal& max_modulus) {
  const BigReal r = max_modulus * num::sqrt(uniform_unit({seed, i, 1}, kPrec));
  return BigComplex::polar(r, BigReal::two_pi(kPrec) * uniform_unit({seed, i, 2}, kPrec));
}

Arc random_arc(std::uint64_t seed, std::uint64_t i) {
  const CirclePoint start = num::boundary_sample(seed, i, kPrec);
  // length in (0, 2 pi), bounded away from both ends
  const BigReal length = BigReal::two_pi(kPrec) * (uniform_unit({seed, i, 3}, kPrec) * dec("0.98") + dec("0.01"));
  return {start, start.rotated(length)};
}

TEST(DiskAutomorphism, IdentityFixesPoints) {
  const auto id = DiskAutomorphism::identity(kPrec);
  const BigComplex z(dec("0.3"), dec("-0.4"));
  EXPECT_EQ(id.apply(z), z);
}

TEST(DiskAutomorphism, MapsZeroToC) {
  const DiskAutomorphism m(BigComplex(dec("0.5")), CirclePoint(kPrec));
  EXPECT_EQ(m.apply(BigComplex(kPrec)).re(), dec("0.5"));
}

TEST(DiskAutomorphism, HalfAtHalfIsFourFifths) {
  const DiskAutomorphism m(BigComplex(dec("0.5")), CirclePoint(kPrec));
  const BigComplex image = m.apply(BigComplex(dec("0.5")));
  EXPECT_LT(abs(image.re() - BigReal(4L, kPrec) / 5L), tiny(250));
  EXPECT_TRUE(image.im().is_zero());
}

TEST(DiskAutomorphism, RejectsCOnOrOutsideCircle) {
  EXPECT_THROW(DiskAutomorphism(BigComplex(BigReal(1L, kPrec)), CirclePoint(kPrec)), DomainError);
}

TEST(DiskAutomorphism, RejectsPointsOutsideDisk) {
  const DiskAutomorphism m(BigComplex(dec("0.5")), CirclePoint(kPrec));
  EXPECT_THROW(m.apply(BigComplex(dec("1.01"))), DomainError);
  EXPECT_NO_THROW(m.apply(BigComplex(BigReal(1L, kPrec))));
}

TEST(DiskAutomorphism, InverseUndoesApply) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const DiskAutomorphism m(random_disk_point(11, i, dec("0.95")), num::boundary_sample(12, i, kPrec));
    const BigComplex z = random_disk_point(13, i, BigReal(1L, kPrec));
    EXPECT_LT(abs(m.inverse().apply(m.apply(z)) - z), tiny(200));
  }
}

TEST(DiskAutomorphism, BoundaryActionAgreesWithInteriorFormulaAndStaysOnCircle) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const DiskAutomorphism m(random_disk_point(21, i, dec("0.99")), num::boundary_sample(22, i, kPrec));
    const CirclePoint zeta = num::boundary_sample(23, i, kPrec);
    const BigComplex direct = m.apply(zeta.embed());
    EXPECT_LT(abs(abs(direct) - 1L), tiny(kPrec - 8));
    EXPECT_LT(num::chordal_distance(m.apply(zeta), direct), tiny(200));
  }
}

TEST(DiskAutomorphism, ComposeWithInverseIsIdentityOnGrid) {
  const DiskAutomorphism m(BigComplex(dec("0.3"), dec("0.6")), CirclePoint(dec("2.0")));
  const DiskAutomorphism id = compose(m, m.inverse());
  for (long a = -4; a <= 4; ++a) {
    for (long b = -4; b <= 4; ++b) {
      const BigComplex z(BigReal(a, kPrec) / 5L, BigReal(b, kPrec) / 5L);
      if (num::norm(z) >= 1L) continue;
      EXPECT_LT(abs(id.apply(z) - z), tiny(200));
    }
  }
}

TEST(DiskAutomorphism, ComposeMatchesSequentialApplication) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const DiskAutomorphism m1(random_disk_point(31, i, dec("0.9")), num::boundary_sample(32, i, kPrec));
    const DiskAutomorphism m2(random_disk_point(33, i, dec("0.9")), num::boundary_sample(34, i, kPrec));
    const BigComplex z = random_disk_point(35, i, dec("0.99"));
    EXPECT_LT(abs(compose(m1, m2).apply(z) - m1.apply(m2.apply(z))), tiny(200));
  }
}

TEST(Normalizer, ZeroGivesIdentity) {
  const auto m = normalizer(BigComplex(kPrec));
  const BigComplex z(dec("0.25"), dec("0.5"));
  EXPECT_EQ(m.apply(z), z);
}

TEST(Normalizer, SendsZeroToW) {
  const BigComplex w(dec("0.5"));
  const auto m = normalizer(w);
  EXPECT_EQ(m.apply(BigComplex(kPrec)), w);
  EXPECT_LT(abs(m.inverse().apply(w)), tiny(250));
}

TEST(Normalizer, MinusWMapsToZero) {
  const BigComplex w(dec("0.3"), dec("0.4"));
  EXPECT_LT(abs(normalizer(w).apply(-w)), dec("1e-30"));
}

TEST(Normalizer, RejectsBoundaryW) { EXPECT_THROW(normalizer(BigComplex(dec("0.6"), dec("0.8"))), DomainError); }

TEST(Arc, HalfOpenMembershipAndComplementLength) {
  const Arc arc(CirclePoint(dec("1")), CirclePoint(dec("2.5")));
  EXPECT_TRUE(arc.contains(arc.start()));
  EXPECT_FALSE(arc.contains(arc.end()));
  EXPECT_LT(abs(arc.complement().length() + arc.length() - BigReal::two_pi(kPrec)), tiny(250));
  EXPECT_TRUE(arc.complement().contains(arc.end()));
}

TEST(Arc, WrapsThroughZero) {
  const Arc arc = Arc::centered(CirclePoint(kPrec), dec("0.5"));
  EXPECT_TRUE(arc.contains(CirclePoint(kPrec)));
  EXPECT_TRUE(arc.contains(CirclePoint(dec("-0.4"))));
  EXPECT_FALSE(arc.contains(CirclePoint(dec("0.6"))));
  EXPECT_LT(abs(arc.length() - 1L), tiny(250));
}

TEST(Arc, DegenerateArcRejected) {
  EXPECT_THROW(Arc(CirclePoint(dec("1")), CirclePoint(dec("1"))), DomainError);
}

TEST(Cayley, FixedValues) {
  EXPECT_LT(abs(Cayley::to_disk(BigComplex::i(kPrec))), tiny(250));
  const BigComplex half = Cayley::to_disk(BigComplex(BigReal(kPrec), BigReal(3L, kPrec)));
  EXPECT_LT(abs(half - BigComplex(dec("0.5"))), tiny(250));
  const CirclePoint minus_one = Cayley::real_to_circle(BigReal(kPrec));
  EXPECT_LT(abs(minus_one.embed() - BigComplex(BigReal(-1L, kPrec))), tiny(250));
}

TEST(Cayley, RoundTrips) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const BigComplex w((uniform_unit({41, i, 0}, kPrec) - dec("0.5")) * 20L, uniform_unit({41, i, 1}, kPrec) * 5L);
    EXPECT_LT(abs(Cayley::to_halfplane(Cayley::to_disk(w)) - w), tiny(200));
    const BigReal x = (uniform_unit({42, i, 0}, kPrec) - dec("0.5")) * 100L;
    EXPECT_LT(abs(Cayley::circle_to_real(Cayley::real_to_circle(x)) - x), tiny(200));
    const BigComplex direct = Cayley::to_disk(BigComplex(x, tiny(kPrec * 3, kPrec * 4)));
    EXPECT_LT(num::chordal_distance(Cayley::real_to_circle(x), direct), tiny(200));
    EXPECT_LT(abs(Cayley::distance_to_one(x) - abs(direct - BigComplex(BigReal(1L, kPrec)))), tiny(200));
  }
}

TEST(Cayley, InverseRejectsOne) {
  EXPECT_THROW(Cayley::circle_to_real(CirclePoint(kPrec)), DomainError);
  EXPECT_THROW(Cayley::to_halfplane(BigComplex(BigReal(1L, kPrec))), DomainError);
  EXPECT_THROW(Cayley::to_disk(BigComplex(BigReal(1L, kPrec))), DomainError);
}

TEST(Pullback, IdentityReturnsSameArc) {
  const Arc j(CirclePoint(dec("0.5")), CirclePoint(dec("4")));
  const Arc i = pullback_arc(DiskAutomorphism::identity(kPrec), j);
  EXPECT_LT(num::chordal_distance(i.start(), j.start()), tiny(250));
  EXPECT_LT(num::chordal_distance(i.end(), j.end()), tiny(250));
}

TEST(Pullback, HalfNormalizerPullsLeftHalfOntoArcAroundMinusOne) {
  const BigReal pi = BigReal::pi(kPrec);
  const Arc j(CirclePoint(pi / 2L), CirclePoint(pi * 3L / 2L));
  const Arc i = pullback_arc(normalizer(BigComplex(dec("0.5"))), j);
  EXPECT_TRUE(i.contains(CirclePoint(pi)));
  // endpoints: (+-i - 1/2)/(1 -+ i/2), evaluated directly
  const BigComplex half(dec("0.5"));
  const BigComplex top = (BigComplex::i(kPrec) - half) / (1L - half * BigComplex::i(kPrec));
  EXPECT_LT(num::chordal_distance(i.start(), top), tiny(200));
}

TEST(Pullback, CommutesWithComplement) {
  for (std::uint64_t k = 0; k < 100; ++k) {
    const auto m = normalizer(random_disk_point(51, k, dec("0.99")));
    const Arc j = random_arc(52, k);
    const Arc a = pullback_arc(m, j.complement());
    const Arc b = pullback_arc(m, j).complement();
    EXPECT_LT(num::chordal_distance(a.start(), b.start()), tiny(200));
    EXPECT_LT(num::chordal_distance(a.end(), b.end()), tiny(200));
  }
}

TEST(Pullback, LengthIsAdditiveOverAdjacentArcs) {
  for (std::uint64_t k = 0; k < 100; ++k) {
    const auto m = normalizer(random_disk_point(61, k, dec("0.95")));
    const Arc whole = random_arc(62, k);
    const CirclePoint mid = whole.midpoint();
    const Arc left(whole.start(), mid);
    const Arc right(mid, whole.end());
    const BigReal sum = pullback_arc(m, left).length() + pullback_arc(m, right).length();
    EXPECT_LT(abs(sum - pullback_arc(m, whole).length()), tiny(200));
  }
}

TEST(PullbackLength, ZeroWGivesArcLength) {
  const Arc j(CirclePoint(dec("0.2")), CirclePoint(dec("5.5")));
  EXPECT_LT(abs(pullback_length_closed_form(BigComplex(kPrec), j) - j.length()), tiny(240));
}

TEST(PullbackLength, SymmetricArcAtHalf) {
  const BigReal third = BigReal::pi(kPrec) / 3L;
  const Arc j(CirclePoint(-third), CirclePoint(third));
  const BigComplex w(dec("0.5"));
  const BigReal oracle = pullback_arc(normalizer(w), j).length();
  EXPECT_LT(abs(pullback_length_closed_form(w, j) - oracle), tiny(200));
}

TEST(PullbackLength, StressNearEndpoint) {
  const Arc j(CirclePoint(dec("1")), CirclePoint(dec("2")));
  const BigComplex w = BigComplex::polar(dec("0.999"), dec("1"));
  const BigReal oracle = pullback_arc(normalizer(w), j).length();
  EXPECT_LT(abs(pullback_length_closed_form(w, j) - oracle), tiny(100));
}

TEST(PullbackLength, ClosedFormMatchesEndpointOracleOnRandomInputs) {
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const BigComplex w = random_disk_point(71, k, dec("0.99"));
    const Arc j = random_arc(72, k);
    const BigReal closed = pullback_length_closed_form(w, j);
    const BigReal oracle = pullback_arc(normalizer(w), j).length();
    ASSERT_LT(abs(closed - oracle), tiny(kPrec / 2)) << "sample " << k;
  }
}

TEST(PullbackLength, RejectsBoundaryW) {
  const Arc j(CirclePoint(dec("1")), CirclePoint(dec("2")));
  EXPECT_THROW(pullback_length_closed_form(BigComplex(BigReal(1L, kPrec)), j), DomainError);
}

}  // namespace
}  // namespace innerdyn::moebius
