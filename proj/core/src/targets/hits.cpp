#include "innerdyn/targets/hits.hpp"

#include <algorithm>

#include "innerdyn/dynamics/parallel.hpp"
#include "innerdyn/errors.hpp"
#include "innerdyn/numerics/sampling.hpp"

namespace innerdyn::targets {

namespace {

Bits hits_start_bits(const std::vector<BigReal>& lengths, const PrecisionPolicy& policy) {
  long deepest = 0;
  for (const BigReal& len : lengths) {
    if (len.sign() > 0) deepest = std::max(deepest, -num::exponent_of(len));
  }
  return std::clamp<Bits>(deepest + policy.agreement_tol_bits + 64, policy.base_bits, policy.max_bits);
}

// Membership too close to call at the agreed precision.
bool ambiguous(const TargetSequence& t, const TargetArc& arc, int n, const CirclePoint& zeta, const BigReal& distance,
               Bits tol_bits) {
  const BigReal slack = BigReal::pow2(-tol_bits, distance.prec());
  if (const DiskRadius* d = t.disk()) {
    const BigReal r = d->radius.at(n, distance.prec());
    return num::abs(distance - r) <= r * slack;
  }
  if (arc.coverage != TargetArc::Coverage::Partial) return false;
  return num::chordal_distance(zeta, arc.arc->start()) <= slack || num::chordal_distance(zeta, arc.arc->end()) <= slack;
}

}  // namespace

BigReal HitReport::fraction_hitting_after(int n0, Bits prec) const {
  if (n0 < 0 || n0 > horizon) throw DomainError("fraction_hitting_after: cutoff outside [0, horizon]");
  if (denominator == 0) return BigReal(prec);
  return BigReal(static_cast<long>(hitting_after[static_cast<std::size_t>(n0)]), prec) / static_cast<long>(denominator);
}

HitReport hits(const InnerFunction& f, const TargetSequence& t, std::size_t samples, std::uint64_t seed, int horizon,
               const PrecisionPolicy& policy, const HitsOptions& options) {
  if (samples == 0) throw DomainError("hits needs at least one sample");
  if (horizon < 1) throw DomainError("hits needs horizon >= 1");
  policy.validate();

  HitReport report;
  report.horizon = horizon;
  report.samples = samples;
  report.seed = seed;
  if (options.p) {
    report.p = *options.p;
  } else if (const DiskRadius* d = t.disk()) {
    report.p = d->p;
  } else {
    report.p = dynamics::estimate_p(f, policy);
  }
  const bool native = t.disk() && t.disk()->p == report.p;
  report.start_bits = hits_start_bits(target_lengths(t, horizon, policy.base_bits), policy);

  report.outcomes.resize(samples);
  dynamics::parallel_for(samples, options.workers, [&](std::size_t i) {
    SampleHits& out = report.outcomes[i];
    out.index = i;
    const auto start = [&](Bits bits) { return num::boundary_sample(seed, i, bits); };
    const dynamics::OrbitRecord record =
        dynamics::boundary_orbit(f, start, horizon, policy, report.p, report.start_bits);
    if (record.truncated) {
      out.status = record.truncated->reason == dynamics::TruncationReason::SingularPoint ? SampleStatus::Singular
                                                                                       : SampleStatus::Indeterminate;
      out.detail = record.truncated->detail;
      return;
    }
    for (int n = 1; n <= horizon; ++n) {
      const dynamics::OrbitPoint& pt = record.points[static_cast<std::size_t>(n)];
      const CirclePoint& zeta = std::get<CirclePoint>(pt.value);
      const TargetArc arc = target_arc(t, n, zeta.prec());
      if (ambiguous(t, arc, n, zeta, pt.distance_to_p, policy.agreement_tol_bits)) {
        out.status = SampleStatus::Indeterminate;
        out.detail = "orbit within agreement tolerance of a target endpoint at n = " + std::to_string(n);
        out.hit_times.clear();
        out.last_hit.reset();
        return;
      }
      const bool in = native ? target_contains(t, n, zeta, &pt.distance_to_p) : arc.contains(zeta);
      if (in) {
        out.hit_times.push_back(n);
        out.last_hit = n;
      }
    }
  });

  report.hitting_after.assign(static_cast<std::size_t>(horizon) + 1, 0);
  for (const SampleHits& out : report.outcomes) {
    if (out.status == SampleStatus::Singular) {
      ++report.singular;
      continue;
    }
    if (out.status == SampleStatus::Indeterminate) {
      ++report.indeterminate;
      continue;
    }
    if (!out.last_hit) continue;
    for (int n0 = 0; n0 < *out.last_hit; ++n0) ++report.hitting_after[static_cast<std::size_t>(n0)];
  }
  const std::size_t excluded = report.singular + report.indeterminate;
  report.healthy =
      BigReal(static_cast<long>(excluded), 128) / static_cast<long>(samples) < options.max_excluded_fraction;
  report.denominator = report.healthy ? samples - excluded : samples;
  return report;
}

}  // namespace innerdyn::targets
