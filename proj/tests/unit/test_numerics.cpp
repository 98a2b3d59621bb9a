#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "innerdyn/errors.hpp"
#include "innerdyn/numerics/circle_point.hpp"
#include "innerdyn/numerics/precision.hpp"
#include "innerdyn/numerics/sampling.hpp"

namespace innerdyn::num {
namespace {

TEST(BigReal, RejectsPrecisionBelowFloor) { EXPECT_THROW(BigReal(1L, 32), std::invalid_argument); }

TEST(BigReal, MixedPrecisionTakesMaximum) {
  const BigReal a(1L, 64);
  const BigReal b(3L, 256);
  EXPECT_EQ((a / b).prec(), 256);
  EXPECT_EQ((b + a).prec(), 256);
}

TEST(BigReal, ParseIsExactForDecimals) {
  const BigReal tenth = BigReal::parse("0.1", 512);
  EXPECT_LT(abs(tenth * 10L - 1L), BigReal::pow2(-500, 512));
  EXPECT_THROW(BigReal::parse("0.1x", 128), DomainError);
}

TEST(BigReal, ToStringUsesFortySignificantDigits) {
  EXPECT_EQ(BigReal(1L, 256).to_string(), "1.000000000000000000000000000000000000000e+00");
}

TEST(ChordalDistance, AntipodalPointsAreTwoApart) {
  const CirclePoint one(256);
  const CirclePoint minus_one(BigReal::pi(256));
  EXPECT_LT(abs(chordal_distance(one, minus_one) - 2L), BigReal::pow2(-250, 256));
}

TEST(ChordalDistance, IdentityIsZero) {
  const CirclePoint z(BigReal::parse("1.234", 256));
  EXPECT_TRUE(chordal_distance(z, z).is_zero());
}

TEST(ChordalDistance, HalfAngleIdentityAtPiOverThree) {
  const Bits prec = 512;
  const BigReal theta = BigReal::pi(prec) / 3L;
  const BigComplex direct = BigComplex(BigReal(1L, prec)) - BigComplex::polar(BigReal(1L, prec), theta);
  EXPECT_LT(abs(abs(direct) - 1L), BigReal::pow2(-500, prec));
  EXPECT_LT(abs(chordal_distance(CirclePoint(prec), CirclePoint(theta)) - 1L), BigReal::pow2(-500, prec));
}

TEST(ChordalDistance, RotationInvariant) {
  const Bits prec = 256;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const CirclePoint a = boundary_sample(7, 3 * i, prec);
    const CirclePoint b = boundary_sample(7, 3 * i + 1, prec);
    const BigReal rot = boundary_sample(7, 3 * i + 2, prec).angle();
    const BigReal d0 = chordal_distance(a, b);
    const BigReal d1 = chordal_distance(a.rotated(rot), b.rotated(rot));
    EXPECT_LT(abs(d0 - d1), BigReal::pow2(-prec + 8, prec));
  }
}

TEST(ChordalDistance, TriangleInequality) {
  const Bits prec = 128;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const CirclePoint a = boundary_sample(9, 3 * i, prec);
    const CirclePoint b = boundary_sample(9, 3 * i + 1, prec);
    const CirclePoint c = boundary_sample(9, 3 * i + 2, prec);
    EXPECT_LE(chordal_distance(a, c), chordal_distance(a, b) + chordal_distance(b, c) + BigReal::pow2(-120, prec));
  }
}

TEST(CirclePoint, EmbeddingIsUnimodularAndNormalizationIdempotent) {
  const Bits prec = 256;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const BigReal raw = (uniform_unit({3, i, 0}, prec) - BigReal::parse("0.5", prec)) * 100L;
    const CirclePoint z(raw);
    EXPECT_LT(abs(abs(z.embed()) - 1L), BigReal::pow2(-prec + 4, prec));
    EXPECT_EQ(normalize_angle(z.angle()), z.angle());
    EXPECT_GE(z.angle(), 0L);
    EXPECT_LT(z.angle(), BigReal::two_pi(prec));
  }
}

TEST(Philox, KnownAnswerVectors) {
  using C = Philox4x32::Counter;
  EXPECT_EQ(Philox4x32::block({0, 0, 0, 0}, {0, 0}), (C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(Philox4x32::block({~0u, ~0u, ~0u, ~0u}, {~0u, ~0u}),
            (C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(Philox4x32::block({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
            (C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Sampling, DeterministicForEqualArguments) {
  EXPECT_EQ(uniform_boundary_sample(42, 3, 256), uniform_boundary_sample(42, 3, 256));
}

TEST(Sampling, SampleIsDerivableFromSeedAndIndex) {
  const auto all = uniform_boundary_sample(1, 8, 256);
  EXPECT_EQ(boundary_sample(1, 7, 256), all[7]);
}

TEST(Sampling, HigherPrecisionRefinesTheSameReal) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const BigReal lo = uniform_unit({5, i, 0}, 128);
    const BigReal hi = uniform_unit({5, i, 0}, 256);
    EXPECT_GE(hi, lo);
    EXPECT_LT(hi - lo, BigReal::pow2(-128, 256));
  }
}

TEST(Sampling, RejectsEmptyRequest) { EXPECT_THROW(uniform_boundary_sample(1, 0, 128), DomainError); }

TEST(Sampling, ChiSquaredUniformityOn32Bins) {
  constexpr std::size_t kCount = 100000;
  constexpr int kBins = 32;
  std::array<long, kBins> bins{};
  for (std::size_t i = 0; i < kCount; ++i) {
    const double u = uniform_unit({42, i, 0}, 64).to_double();
    ++bins[static_cast<int>(u * kBins)];
  }
  const double expected = static_cast<double>(kCount) / kBins;
  const double sigma = std::sqrt(expected * (1.0 - 1.0 / kBins));
  double chi2 = 0.0;
  for (const long b : bins) {
    EXPECT_LT(std::abs(b - expected), 5 * sigma);
    chi2 += (b - expected) * (b - expected) / expected;
  }
  // upper 0.001 quantile of chi-squared with 31 degrees of freedom
  EXPECT_LT(chi2, 61.098);
}

TEST(Escalate, ConstantConvergesAtBase) {
  const PrecisionPolicy policy{128, 4096, 64};
  const auto result = escalate([](Bits prec) { return BigReal::parse("0.5", prec); }, policy);
  EXPECT_EQ(result.value, 0.5);
  EXPECT_EQ(result.bits_used, 128);
}

TEST(Escalate, DoublingMapMatchesExactDyadicOracle) {
  const PrecisionPolicy policy{64, 4096, 32};
  constexpr int kSteps = 40;
  const auto run = [](Bits prec) {
    BigReal theta(1L, prec);
    const BigReal period = BigReal::two_pi(prec);
    for (int i = 0; i < kSteps; ++i) theta = fmod(theta * 2L, period);
    return theta;
  };
  const auto result = escalate(run, policy);
  EXPECT_GE(result.bits_used, 128);
  // 2^40 mod 2 pi evaluated with an independent 2048-bit pi
  const BigReal exact = fmod(BigReal::pow2(kSteps, 2048), BigReal::two_pi(2048));
  EXPECT_LT(abs(result.value - exact), BigReal::pow2(-32, 2048));
}

TEST(Escalate, ExhaustionIsReported) {
  const PrecisionPolicy policy{64, 256, 32};
  const auto run = [](Bits prec) { return BigReal(static_cast<long>(prec), prec); };
  try {
    escalate(run, policy);
    FAIL() << "expected PrecisionExhausted";
  } catch (const PrecisionExhausted& e) {
    EXPECT_EQ(e.max_bits(), 256);
  }
}

TEST(Escalate, NeverExceedsMaxBits) {
  const PrecisionPolicy policy{100, 1000, 16};
  for (const Bits b : policy.schedule()) EXPECT_LE(b, 1000);
  EXPECT_EQ(policy.schedule().back(), 1000);
}

TEST(Escalate, LargerMaxBitsDoesNotMoveAgreedResult) {
  const auto run = [](Bits prec) { return exp(BigReal(1L, prec)); };
  const auto small = escalate(run, PrecisionPolicy{64, 512, 48});
  const auto large = escalate(run, PrecisionPolicy{64, 8192, 48});
  EXPECT_LT(abs(small.value - large.value), BigReal::pow2(-48, 8192));
}

}  // namespace
}  // namespace innerdyn::num
