#include "innerdyn/dynamics/theorem_a.hpp"

#include <cmath>

#include "innerdyn/dynamics/parallel.hpp"
#include "innerdyn/errors.hpp"
#include "innerdyn/inner/estimators.hpp"
#include "innerdyn/numerics/sampling.hpp"

namespace innerdyn::dynamics {

CirclePoint estimate_p(const InnerFunction& f, const PrecisionPolicy& policy) {
  return inner::denjoy_wolff(f, policy, BigReal::pow2(-policy.agreement_tol_bits, policy.base_bits));
}

BigReal estimate_alpha(const InnerFunction& f, const CirclePoint& p, const PrecisionPolicy& policy) {
  return inner::angular_derivative(f, p, inner::AngularMethod::OrbitRatio, policy);
}

BigReal TheoremAReport::containment_fraction(int n, Bits prec) const {
  if (n < n_enter || n > n_max) throw DomainError("containment_fraction: n outside the window");
  if (denominator == 0) return BigReal(prec);
  return BigReal(static_cast<long>(containment_counts[static_cast<std::size_t>(n - n_enter)]), prec) /
         static_cast<long>(denominator);
}

BigReal TheoremAReport::eventually_fraction(Bits prec) const {
  if (denominator == 0) return BigReal(prec);
  return BigReal(static_cast<long>(eventually_count), prec) / static_cast<long>(denominator);
}

void TheoremAReport::require_healthy() const {
  if (!healthy) {
    throw UnhealthyRun(std::to_string(singular) + " singular and " + std::to_string(indeterminate) +
                       " indeterminate samples out of " + std::to_string(samples));
  }
}

Bits theorem_a_start_bits(const BigReal& alpha, const BigReal& epsilon, int n_max, const PrecisionPolicy& policy) {
  const BigReal needed = (epsilon + 1L) * static_cast<long>(n_max) * num::log2(1L / alpha);
  const Bits bits = static_cast<Bits>(std::ceil(needed.to_double())) + 64;
  return std::clamp(bits, policy.base_bits, policy.max_bits);
}

TheoremAReport theorem_a_experiment(const InnerFunction& f, const TheoremAConfig& config) {
  if (config.samples == 0) throw DomainError("theorem_a_experiment needs at least one sample");
  if (config.n_enter < 1 || config.n_enter >= config.n_max) throw DomainError("theorem_a_experiment needs 1 <= n_enter < n_max");
  config.policy.validate();

  TheoremAReport report;
  report.p_estimated = !config.p.has_value();
  report.p = config.p ? *config.p : estimate_p(f, config.policy);
  report.alpha_estimated = !config.alpha.has_value();
  report.alpha = config.alpha ? *config.alpha : estimate_alpha(f, report.p, config.policy);
  report.epsilon = config.epsilon;
  report.n_enter = config.n_enter;
  report.n_max = config.n_max;
  report.samples = config.samples;
  report.seed = config.seed;
  const AnnulusSpec annulus(report.p, report.alpha, report.epsilon);
  report.start_bits = theorem_a_start_bits(report.alpha, report.epsilon, config.n_max, config.policy);

  const std::size_t width = static_cast<std::size_t>(config.n_max - config.n_enter + 1);
  const Bits radius_bits = config.policy.max_bits;
  std::vector<BigReal> inner_radii;
  std::vector<BigReal> outer_radii;
  for (int n = config.n_enter; n <= config.n_max; ++n) {
    inner_radii.push_back(annulus.inner_radius(n, radius_bits));
    outer_radii.push_back(annulus.outer_radius(n, radius_bits));
  }
  const auto ambiguous = [&](const BigReal& d, const BigReal& r) {
    return num::abs(d - r) <= r * BigReal::pow2(-config.policy.agreement_tol_bits, radius_bits);
  };

  report.outcomes.resize(config.samples);
  parallel_for(config.samples, config.workers, [&](std::size_t i) {
    SampleOutcome& out = report.outcomes[i];
    out.index = i;
    const auto start = [&](Bits bits) { return num::boundary_sample(config.seed, i, bits); };
    const OrbitRecord record = boundary_orbit(f, start, config.n_max, config.policy, report.p, report.start_bits);
    out.bits_used = record.bits_used;
    if (record.truncated) {
      out.status = record.truncated->reason == TruncationReason::SingularPoint ? SampleStatus::Singular
                                                                             : SampleStatus::Indeterminate;
      out.truncated_at = record.truncated->at;
      out.detail = record.truncated->detail;
      return;
    }
    out.inside.resize(width);
    out.eventually = true;
    for (std::size_t k = 0; k < width; ++k) {
      const BigReal& d = record.points[static_cast<std::size_t>(config.n_enter) + k].distance_to_p;
      if (ambiguous(d, inner_radii[k]) || ambiguous(d, outer_radii[k])) {
        out.status = SampleStatus::Indeterminate;
        out.detail = "distance within agreement tolerance of an annulus radius at n = " +
                     std::to_string(config.n_enter + static_cast<int>(k));
        out.inside.clear();
        out.eventually = false;
        return;
      }
      out.inside[k] = inner_radii[k] < d && d < outer_radii[k];
      out.eventually = out.eventually && out.inside[k];
    }
  });

  report.containment_counts.assign(width, 0);
  for (const SampleOutcome& out : report.outcomes) {
    report.max_bits_used = std::max(report.max_bits_used, out.bits_used);
    switch (out.status) {
      case SampleStatus::Singular:
        ++report.singular;
        continue;
      case SampleStatus::Indeterminate:
        ++report.indeterminate;
        continue;
      case SampleStatus::Determinate:
        break;
    }
    if (out.eventually) ++report.eventually_count;
    for (std::size_t k = 0; k < width; ++k) {
      if (out.inside[k]) ++report.containment_counts[k];
    }
  }
  const std::size_t excluded = report.singular + report.indeterminate;
  const BigReal excluded_fraction = BigReal(static_cast<long>(excluded), 128) / static_cast<long>(config.samples);
  report.healthy = excluded_fraction < config.max_excluded_fraction;
  report.denominator = report.healthy ? config.samples - excluded : config.samples;
  return report;
}

}  // namespace innerdyn::dynamics
