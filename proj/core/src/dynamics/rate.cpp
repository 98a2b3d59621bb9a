#include "innerdyn/dynamics/rate.hpp"

#include <algorithm>

#include "innerdyn/errors.hpp"

namespace innerdyn::dynamics {

namespace {

constexpr int kMinUsable = 10;

// max over the last third <= max over the rest * (1 + 1e-6)
bool stable_maximum(const std::vector<BigReal>& values) {
  const std::size_t head = values.size() - values.size() / 3;
  const BigReal head_max = *std::max_element(values.begin(), values.begin() + static_cast<long>(head));
  const BigReal tail_max = *std::max_element(values.begin() + static_cast<long>(head), values.end());
  const BigReal allowance = 1L + BigReal::parse("1e-6", head_max.prec());
  return tail_max.is_finite() && tail_max <= head_max * allowance;
}

}  // namespace

RateReport verify_rate_bounds(const OrbitRecord& record, const BigReal& alpha, const BigReal& delta, int n_min) {
  if (!(alpha > 0L) || !(alpha < 1L)) throw DomainError("rate bounds need alpha in (0, 1)");
  if (delta < 0L || delta >= alpha) throw DomainError("rate bounds need 0 <= delta < alpha");
  const int first = std::max(n_min, 1);
  const int last = static_cast<int>(record.points.size()) - 1;
  if (last - first + 1 < kMinUsable) {
    throw WindowTooShort("rate bounds need at least 10 orbit points from n = " + std::to_string(first) + ", have " +
                         std::to_string(std::max(0, last - first + 1)));
  }
  RateReport report;
  const Bits prec = std::max(record.points[static_cast<std::size_t>(last)].distance_to_p.prec(), alpha.prec());
  report.alpha = alpha.rounded(prec);
  report.delta = delta.rounded(prec);
  report.n_min = first;
  report.n_max = last;

  const BigReal lower_base = report.alpha - report.delta;
  std::vector<BigReal> uppers;
  std::vector<BigReal> lowers;
  for (int n = first; n <= last; ++n) {
    const BigReal& d = record.points[static_cast<std::size_t>(n)].distance_to_p;
    uppers.push_back(d / num::pow(report.alpha, static_cast<long>(n)));
    lowers.push_back(num::pow(lower_base, static_cast<long>(n)) / d);
  }
  const BigReal one(1L, prec);
  report.c_upper = num::max(one, *std::max_element(uppers.begin(), uppers.end()));
  report.c_lower = num::max(one, *std::max_element(lowers.begin(), lowers.end()));
  report.upper_stable = stable_maximum(uppers);
  report.lower_stable = stable_maximum(lowers);
  for (int n = first; n <= last; ++n) {
    const std::size_t k = static_cast<std::size_t>(n - first);
    const BigReal& d = record.points[static_cast<std::size_t>(n)].distance_to_p;
    report.rows.push_back({n, d, uppers[k], lowers[k], d <= report.c_upper * num::pow(report.alpha, static_cast<long>(n)),
                           num::pow(lower_base, static_cast<long>(n)) / report.c_lower <= d});
  }
  report.satisfied = report.c_upper.is_finite() && report.c_lower.is_finite() && report.upper_stable &&
                     report.lower_stable &&
                     std::all_of(report.rows.begin(), report.rows.end(),
                                 [](const RateRow& r) { return r.upper_holds && r.lower_holds; });
  return report;
}

SummabilityResult summability_check(const OrbitRecord& record, int horizon, int n_min) {
  if (record.kind != OrbitKind::Interior) throw DomainError("summability_check needs an interior orbit");
  if (static_cast<int>(record.points.size()) < horizon + 1) {
    throw DomainError("summability_check: orbit shorter than the horizon " + std::to_string(horizon));
  }
  if (horizon - n_min < 3) throw DomainError("summability_check: window [n_min, horizon] too short");
  SummabilityResult result;
  result.n_min = n_min;
  result.horizon = horizon;
  const Bits prec = record.points.front().one_minus_modulus.prec();
  BigReal sum(prec);
  for (int n = 0; n <= horizon; ++n) {
    const BigReal& t = record.points[static_cast<std::size_t>(n)].one_minus_modulus;
    sum += t;
    result.terms.push_back(t);
    result.partial_sums.push_back(sum);
  }
  const int tail_start = n_min + (horizon - n_min) / 2;
  std::optional<BigReal> worst;
  bool bad = false;
  for (int n = tail_start; n < horizon; ++n) {
    const BigReal& now = result.terms[static_cast<std::size_t>(n)];
    const BigReal& next = result.terms[static_cast<std::size_t>(n + 1)];
    if (!(now > 0L)) {
      bad = true;
      break;
    }
    BigReal ratio = next / now;
    if (!worst || ratio > *worst) worst = std::move(ratio);
  }
  result.ratio_bound = bad || !worst ? BigReal(1L, prec) : *worst;
  result.geometric_tail_certificate = !bad && result.ratio_bound < 1L;
  return result;
}

}  // namespace innerdyn::dynamics
