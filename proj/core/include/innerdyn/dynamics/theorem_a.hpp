#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "innerdyn/dynamics/annulus.hpp"
#include "innerdyn/dynamics/orbit.hpp"

namespace innerdyn::dynamics {

/// Denjoy-Wolff point estimated to 2^-agreement_tol_bits.
CirclePoint estimate_p(const InnerFunction& f, const PrecisionPolicy& policy);
/// Angular derivative at p by the orbit-ratio method.
BigReal estimate_alpha(const InnerFunction& f, const CirclePoint& p, const PrecisionPolicy& policy);

struct TheoremAConfig {
  BigReal epsilon;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  int n_enter = 0;
  int n_max = 0;
  PrecisionPolicy policy;
  /// Pinned values; estimated from f when absent.
  std::optional<CirclePoint> p;
  std::optional<BigReal> alpha;
  unsigned workers = 1;
  /// Runs with more singular or indeterminate samples than this fraction are unhealthy.
  BigReal max_excluded_fraction = BigReal::parse("0.01", 64);
};

enum class SampleStatus {
  Determinate,
  Singular,       // orbit met the singular set; rejected
  Indeterminate,  // precision exhausted, or a distance too close to a radius to decide
};

struct SampleOutcome {
  std::uint64_t index = 0;
  SampleStatus status = SampleStatus::Determinate;
  /// In the annulus at every n in [n_enter, n_max].
  bool eventually = false;
  /// inside[n - n_enter]
  std::vector<bool> inside;
  std::optional<int> truncated_at;
  std::string detail;
  Bits bits_used = 0;
};

struct TheoremAReport {
  CirclePoint p;
  BigReal alpha;
  BigReal epsilon;
  bool p_estimated = false;
  bool alpha_estimated = false;
  int n_enter = 0;
  int n_max = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  Bits start_bits = 0;
  Bits max_bits_used = 0;

  /// containment_counts[n - n_enter]: determinate samples inside the annulus at n.
  std::vector<std::size_t> containment_counts;
  std::size_t eventually_count = 0;
  std::size_t singular = 0;
  std::size_t indeterminate = 0;
  /// Samples in the fraction denominators: determinate ones if healthy, all otherwise.
  std::size_t denominator = 0;
  bool healthy = false;
  std::vector<SampleOutcome> outcomes;

  BigReal containment_fraction(int n, Bits prec = 128) const;
  BigReal eventually_fraction(Bits prec = 128) const;
  /// Throws UnhealthyRun if the run is unhealthy.
  void require_healthy() const;
};

/// ceil((1 + eps) n_max log2(1/alpha)) + 64, at least base_bits.
Bits theorem_a_start_bits(const BigReal& alpha, const BigReal& epsilon, int n_max, const PrecisionPolicy& policy);

/// Monte Carlo check of annulus containment for boundary orbits.
/// Sample i is boundary_sample(seed, i) refined per precision; the report
/// does not depend on the number of workers.
TheoremAReport theorem_a_experiment(const InnerFunction& f, const TheoremAConfig& config);

}  // namespace innerdyn::dynamics
