#pragma once

#include <optional>
#include <vector>

#include "innerdyn/dynamics/orbit.hpp"
#include "innerdyn/targets/target_sequence.hpp"

namespace innerdyn::targets {

using inner::InnerFunction;
using num::BigComplex;
using num::PrecisionPolicy;

/// complement: I_n = M_n^-1(J_n^c); direct: I_n = M_n^-1(J_n), M_n the normalizer of f^n(0).
enum class PullbackMode { Complement, Direct };

const char* to_string(PullbackMode mode);

struct PullbackRow {
  int n = 0;
  /// |p - f^n(0)|
  BigReal distance;
  BigReal radius;
  /// |I_n| from the sine identity; 2 pi minus it in complement mode.
  BigReal length;
  /// |I_n| from the endpoint images, as a cross-check.
  BigReal oracle_length;
  /// Largest chordal distance from an endpoint of M_n^-1(J_n) to its limit point; absent if J_n is empty or full.
  std::optional<BigReal> endpoint_distance;
};

/// Rows for n in [n_first, n_max] from one interior orbit of f.
/// T must be a DiskRadius sequence; its centre is taken as p.
std::vector<PullbackRow> pullback_series(const InnerFunction& f, const TargetSequence& t, PullbackMode mode,
                                         int n_first, int n_max, const PrecisionPolicy& policy);

struct ShrinkageOptions {
  int n_min = 10;
  BigReal ratio_threshold = BigReal::parse("1e-6", 64);
  BigReal length_threshold = BigReal::parse("1e-6", 64);
  BigReal endpoint_threshold = BigReal::parse("1e-4", 64);
  PrecisionPolicy policy;
};

struct ShrinkageRow {
  PullbackRow pullback;
  /// |p - f^n(0)| / r_n (complement) or r_n / |p - f^n(0)| (direct).
  BigReal hypothesis_ratio;
};

struct ShrinkageReport {
  PullbackMode mode = PullbackMode::Complement;
  int n_min = 0;
  int n_max = 0;
  std::vector<ShrinkageRow> rows;
  /// The hypothesis ratio decays on the window tail and ends below threshold.
  bool hypothesis_holds = false;
  bool lengths_shrink = false;
  bool endpoints_converge = false;
  /// Largest relative gap between the sine-identity and endpoint-image lengths.
  BigReal max_oracle_gap;
  bool oracle_agrees = false;
};

/// Lemma-style shrinkage check of pullback targets. A failing hypothesis is
/// reported through hypothesis_holds rather than thrown.
ShrinkageReport pullback_shrinkage_check(const InnerFunction& f, const TargetSequence& t, PullbackMode mode, int n_max,
                                         const ShrinkageOptions& options = {});

/// Non-increasing over the last third of `values` (up to a relative 1e-9) with a final value below threshold.
bool tail_vanishes(const std::vector<BigReal>& values, const BigReal& threshold);

}  // namespace innerdyn::targets
