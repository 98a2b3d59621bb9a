#include "innerdyn/numerics/sampling.hpp"

#include <algorithm>

#include "innerdyn/errors.hpp"

namespace innerdyn::num {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
constexpr int kRounds = 10;

}  // namespace

Philox4x32::Counter Philox4x32::block(Counter c, Key k) noexcept {
  for (int round = 0; round < kRounds; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
    c = {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0], static_cast<std::uint32_t>(p1),
         static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1], static_cast<std::uint32_t>(p0)};
    k[0] += kWeyl0;
    k[1] += kWeyl1;
  }
  return c;
}

BigReal uniform_unit(const SampleKey& key, Bits prec) {
  const Philox4x32::Key philox_key{static_cast<std::uint32_t>(key.seed), static_cast<std::uint32_t>(key.seed >> 32)};
  BigReal u(prec);
  Bits filled = 0;
  for (std::uint32_t block = 0; filled < prec; ++block) {
    const auto words = Philox4x32::block(
        {static_cast<std::uint32_t>(key.index), static_cast<std::uint32_t>(key.index >> 32), block, key.stream},
        philox_key);
    for (const std::uint32_t word : words) {
      if (filled >= prec) break;
      const Bits take = std::min<Bits>(32, prec - filled);
      const unsigned long bits = static_cast<unsigned long>(word) >> (32 - take);
      filled += take;
      // u has `prec` bits of precision and every partial sum is a multiple of 2^-prec below 1: exact
      BigReal term(prec);
      mpfr_set_ui_2exp(term.get(), bits, -static_cast<long>(filled), MPFR_RNDN);
      u = u + term;
    }
  }
  return u;
}

CirclePoint boundary_sample(std::uint64_t seed, std::uint64_t index, Bits prec) {
  return CirclePoint(BigReal::two_pi(prec) * uniform_unit({seed, index, 0}, prec));
}

std::vector<CirclePoint> uniform_boundary_sample(std::uint64_t seed, std::size_t count, Bits prec) {
  if (count == 0) throw DomainError("uniform_boundary_sample requires count >= 1");
  std::vector<CirclePoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(boundary_sample(seed, i, prec));
  return out;
}

}  // namespace innerdyn::num
