#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "innerdyn/dynamics/theorem_a.hpp"
#include "innerdyn/targets/target_sequence.hpp"

namespace innerdyn::targets {

using dynamics::SampleStatus;
using inner::InnerFunction;
using num::PrecisionPolicy;

struct HitsOptions {
  /// Orbit centre for distances; defaults to the disk centre of T, else estimated.
  std::optional<CirclePoint> p;
  unsigned workers = 1;
  BigReal max_excluded_fraction = BigReal::parse("0.01", 64);
};

struct SampleHits {
  std::uint64_t index = 0;
  SampleStatus status = SampleStatus::Determinate;
  /// n in [1, horizon] with (f*)^n(zeta) in J_n.
  std::vector<int> hit_times;
  std::optional<int> last_hit;
  std::string detail;
};

struct HitReport {
  CirclePoint p;
  int horizon = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  Bits start_bits = 0;
  std::vector<SampleHits> outcomes;
  std::size_t singular = 0;
  std::size_t indeterminate = 0;
  std::size_t denominator = 0;
  bool healthy = false;
  /// hitting_after[N0]: determinate samples with a hit at some n > N0, N0 = 0..horizon.
  std::vector<std::size_t> hitting_after;

  BigReal fraction_hitting_after(int n0, Bits prec = 128) const;
};

/// Records every n <= horizon with (f*)^n(zeta) in J_n for boundary samples
/// boundary_sample(seed, i). Membership within 2^-agreement_tol_bits of an
/// endpoint of J_n makes the sample indeterminate. Deterministic in workers.
HitReport hits(const InnerFunction& f, const TargetSequence& t, std::size_t samples, std::uint64_t seed, int horizon,
               const PrecisionPolicy& policy, const HitsOptions& options = {});

}  // namespace innerdyn::targets
