#include "innerdyn/dynamics/orbit.hpp"

#include "innerdyn/errors.hpp"
#include "innerdyn/inner/iteration.hpp"

namespace innerdyn::dynamics {

namespace {

struct Run {
  std::vector<OrbitPoint> points;
  std::optional<Truncation> singular;
};

std::optional<int> first_disagreement(const Run& lower, const Run& higher, Bits tol_bits) {
  const std::size_t n = std::min(lower.points.size(), higher.points.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!relative_agreement(lower.points[i].distance_to_p, higher.points[i].distance_to_p, tol_bits)) {
      return static_cast<int>(i);
    }
  }
  if (lower.points.size() != higher.points.size()) return static_cast<int>(n);
  return std::nullopt;
}

// Shared escalation loop: run(bits) yields the orbit at one precision, or
// throws NeedMorePrecision when that precision cannot represent it at all.
template <class RunAt>
OrbitRecord escalate_orbit(OrbitKind kind, const CirclePoint& p, const PrecisionPolicy& policy, Bits start_bits,
                           RunAt&& run_at) {
  policy.validate();
  OrbitRecord record;
  record.kind = kind;
  record.p = p;
  std::optional<Run> previous;
  Bits previous_bits = 0;
  int agreed_prefix = 0;
  for (const Bits bits : policy.schedule(start_bits)) {
    record.max_bits_tried = bits;
    Run run;
    try {
      run = run_at(bits);
    } catch (const num::NeedMorePrecision&) {
      previous.reset();
      continue;
    }
    if (run.singular) {
      record.points = std::move(run.points);
      record.truncated = std::move(run.singular);
      record.bits_used = bits;
      for (OrbitPoint& pt : record.points) pt.bits_used = bits;
      return record;
    }
    if (previous) {
      const std::optional<int> cut = first_disagreement(*previous, run, policy.agreement_tol_bits);
      if (!cut) {
        record.points = std::move(run.points);
        record.bits_used = previous_bits;
        for (OrbitPoint& pt : record.points) pt.bits_used = previous_bits;
        return record;
      }
      agreed_prefix = *cut;
    } else {
      agreed_prefix = 0;
    }
    previous = std::move(run);
    previous_bits = bits;
  }
  record.bits_used = record.max_bits_tried;
  if (!previous) {
    record.truncated = Truncation{0, TruncationReason::PrecisionExhausted, "no precision could represent the orbit"};
    return record;
  }
  // keep the prefix on which the last two runs agreed
  record.points = std::move(previous->points);
  record.points.resize(static_cast<std::size_t>(agreed_prefix));
  record.truncated = Truncation{agreed_prefix, TruncationReason::PrecisionExhausted,
                                "no agreement up to " + std::to_string(policy.max_bits) + " bits"};
  for (OrbitPoint& pt : record.points) pt.bits_used = record.bits_used;
  return record;
}

}  // namespace

void OrbitRecord::require_complete() const {
  if (!truncated) return;
  if (truncated->reason == TruncationReason::SingularPoint) throw SingularPoint(truncated->detail, truncated->at);
  throw PrecisionExhausted(truncated->detail, static_cast<long>(max_bits_tried));
}

bool relative_agreement(const BigReal& a, const BigReal& b, Bits tol_bits) {
  if (!a.is_finite() || !b.is_finite()) return false;
  if (b.is_zero()) return a.is_zero();
  return num::abs(a - b) <= num::abs(b) * BigReal::pow2(-tol_bits, b.prec());
}

OrbitRecord interior_orbit(const InnerFunction& f, int n_max, const PrecisionPolicy& policy, const CirclePoint& p,
                           Bits start_bits) {
  if (n_max < 1) throw DomainError("interior_orbit requires n_max >= 1");
  return escalate_orbit(OrbitKind::Interior, p, policy, start_bits, [&](Bits bits) {
    Run run;
    run.points.reserve(static_cast<std::size_t>(n_max) + 1);
    const CirclePoint pb = p.rounded(bits);
    inner::InteriorIterate it = inner::interior_origin(f, bits);
    for (int n = 0; n <= n_max; ++n) {
      if (n > 0) {
        try {
          it = inner::interior_step(f, it);
        } catch (const DomainError&) {
          throw num::NeedMorePrecision("orbit left the disk through rounding");
        }
      }
      run.points.push_back({it.z, inner::distance_to(it, pb), inner::one_minus_modulus(it), bits});
    }
    return run;
  });
}

OrbitRecord boundary_orbit(const InnerFunction& f, const StartPoint& start, int n_max, const PrecisionPolicy& policy,
                           const CirclePoint& p, Bits start_bits) {
  if (n_max < 1) throw DomainError("boundary_orbit requires n_max >= 1");
  return escalate_orbit(OrbitKind::Boundary, p, policy, start_bits, [&](Bits bits) {
    Run run;
    run.points.reserve(static_cast<std::size_t>(n_max) + 1);
    const CirclePoint pb = p.rounded(bits);
    const BigReal zero(bits);
    std::optional<inner::BoundaryIterate> it;
    for (int n = 0; n <= n_max; ++n) {
      try {
        it = n == 0 ? inner::boundary_start(f, start(bits)) : inner::boundary_step(f, *it);
      } catch (const SingularPoint& e) {
        run.singular = Truncation{n, TruncationReason::SingularPoint, e.what()};
        return run;
      }
      run.points.push_back({it->zeta, inner::distance_to(*it, pb), zero, bits});
    }
    return run;
  });
}

OrbitRecord boundary_orbit(const InnerFunction& f, const CirclePoint& zeta, int n_max, const PrecisionPolicy& policy,
                           const CirclePoint& p, Bits start_bits) {
  return boundary_orbit(
      f, [&zeta](Bits bits) { return zeta.rounded(bits); }, n_max, policy, p, start_bits);
}

}  // namespace innerdyn::dynamics
