#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "innerdyn/numerics/circle_point.hpp"

namespace innerdyn::num {

/// Philox4x32-10 (Salmon et al., Random123): a counter-based generator, so
/// block(counter, key) is a pure function and any sample index can be
/// produced independently of every other one.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter counter, Key key) noexcept;
};

/// Identifies one random real: (seed, sample index, stream).
///
/// Streams separate independent coordinates of the same sample (e.g. radius
/// and angle of a disk sample).
struct SampleKey {
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  std::uint32_t stream = 0;
};

/// Uniform dyadic U in [0, 1) carrying exactly `prec` random bits.
///
/// The bits are a prefix of one infinite stream, so the values at precision
/// P and 2P differ by less than 2^-P: the sample is one fixed real number
/// approximated ever more closely.
BigReal uniform_unit(const SampleKey& key, Bits prec);

/// Boundary point with angle 2*pi*U, U = uniform_unit({seed, index, 0}, prec).
CirclePoint boundary_sample(std::uint64_t seed, std::uint64_t index, Bits prec);

/// `count` consecutive boundary samples 0..count-1.
std::vector<CirclePoint> uniform_boundary_sample(std::uint64_t seed, std::size_t count, Bits prec);

}  // namespace innerdyn::num
