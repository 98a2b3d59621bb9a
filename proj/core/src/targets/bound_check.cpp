#include "innerdyn/targets/bound_check.hpp"

#include "innerdyn/dynamics/theorem_a.hpp"
#include "innerdyn/errors.hpp"

namespace innerdyn::targets {

const char* to_string(BoundVariant variant) { return variant == BoundVariant::Upper ? "upper" : "lower"; }

BigReal section4_bound(BoundVariant variant, const BigReal& alpha, const BigReal& epsilon, const BigReal& c, int n) {
  const BigReal ne = epsilon * static_cast<long>(n);
  const BigReal two_c_pi = BigReal::two_pi(alpha.prec()) * c;
  if (variant == BoundVariant::Upper) {
    return two_c_pi / (num::pow(alpha, -ne) - c * 2L + c * c * num::pow(alpha, ne));
  }
  const BigReal third = ne / 3L;
  return two_c_pi / (num::pow(alpha, ne) - c * 2L * num::pow(alpha, third) + c * c * num::pow(alpha, -third));
}

BigReal section4_guard(BoundVariant variant, const BigReal& alpha, const BigReal& epsilon, const BigReal& c, int n) {
  const long nl = n;
  if (variant == BoundVariant::Upper) {
    return num::pow(alpha, (1L - epsilon) * nl) - c * num::pow(alpha, nl);
  }
  return c * num::pow(alpha, (epsilon / 3L + 1L) * nl) - num::pow(alpha, (epsilon + 1L) * nl);
}

BoundCheckReport section4_bound_check(const InnerFunction& f, const BigReal& epsilon, const BigReal& c,
                                      BoundVariant variant, int n0, int n_max, const BoundCheckOptions& options) {
  if (epsilon <= 0L || epsilon >= 1L) throw DomainError("bound check needs 0 < epsilon < 1");
  if (c <= 0L) throw DomainError("bound check needs C > 0");
  if (n0 < 1 || n0 >= n_max) throw DomainError("bound check needs 1 <= n0 < n_max");
  const PrecisionPolicy& policy = options.policy;
  policy.validate();

  BoundCheckReport report;
  report.variant = variant;
  report.p = options.p ? *options.p : dynamics::estimate_p(f, policy);
  report.alpha = options.alpha ? *options.alpha : dynamics::estimate_alpha(f, report.p, policy);
  report.epsilon = epsilon;
  report.c = c;
  report.n0 = n0;
  report.n_max = n_max;

  const Bits prec = policy.base_bits;
  const BigReal alpha = report.alpha.rounded(prec);
  const BigReal eps = epsilon.rounded(prec);
  const BigReal cc = c.rounded(prec);
  const RadiusRule rule{RadiusKind::Geometric, BigReal(1L, prec), alpha,
                        variant == BoundVariant::Upper ? 1L - eps : eps + 1L};
  const TargetSequence t = TargetSequence::disk_radius(report.p, rule);
  const PullbackMode mode = variant == BoundVariant::Upper ? PullbackMode::Complement : PullbackMode::Direct;

  std::vector<BigReal> bounds;
  int first_included = 0;
  for (PullbackRow& pb : pullback_series(f, t, mode, n0, n_max, policy)) {
    BoundRow row;
    row.n = pb.n;
    row.length = std::move(pb.length);
    if (section4_guard(variant, alpha, eps, cc, pb.n) <= 0L) {
      row.excluded = true;
      report.excluded.push_back(pb.n);
    } else {
      row.bound = section4_bound(variant, alpha, eps, cc, pb.n);
      row.holds = row.length <= *row.bound;
      if (!row.holds) ++report.violations;
      if (bounds.empty()) first_included = pb.n;
      bounds.push_back(*row.bound);
    }
    report.rows.push_back(std::move(row));
  }
  if (bounds.empty()) {
    report.bound_summable.note = "every n in the window is excluded";
  } else {
    report.bound_summable = summable(bounds, first_included, options.summable);
  }
  report.passed = report.violations == 0 && report.bound_summable.certificate;
  return report;
}

}  // namespace innerdyn::targets
