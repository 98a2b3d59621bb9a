#include "innerdyn/targets/shrinkage.hpp"

#include "innerdyn/errors.hpp"
#include "innerdyn/moebius/pullback.hpp"

namespace innerdyn::targets {

const char* to_string(PullbackMode mode) { return mode == PullbackMode::Complement ? "complement" : "direct"; }

std::vector<PullbackRow> pullback_series(const InnerFunction& f, const TargetSequence& t, PullbackMode mode,
                                         int n_first, int n_max, const PrecisionPolicy& policy) {
  const auto* disk = std::get_if<DiskRadius>(&t.variant());
  if (!disk) throw DomainError("pullback checks need a DiskRadius target sequence");
  if (n_first < 1 || n_first > n_max) throw DomainError("pullback window needs 1 <= n_first <= n_max");
  const dynamics::OrbitRecord record = dynamics::interior_orbit(f, n_max, policy, disk->p);
  record.require_complete();

  std::vector<PullbackRow> rows;
  for (int n = n_first; n <= n_max; ++n) {
    const dynamics::OrbitPoint& pt = record.points[static_cast<std::size_t>(n)];
    const BigComplex& w = std::get<BigComplex>(pt.value);
    const Bits prec = w.prec();
    const BigReal two_pi = BigReal::two_pi(prec);
    PullbackRow row;
    row.n = n;
    row.distance = pt.distance_to_p;
    row.radius = disk->radius.at(n, prec);
    const TargetArc j = target_arc(t, n, prec);
    const bool complement = mode == PullbackMode::Complement;
    if (j.coverage != TargetArc::Coverage::Partial) {
      const bool full_pullback = (j.coverage == TargetArc::Coverage::Full) != complement;
      row.length = full_pullback ? two_pi : BigReal(prec);
      row.oracle_length = row.length;
      rows.push_back(std::move(row));
      continue;
    }
    const moebius::DiskAutomorphism m = moebius::normalizer(w);
    const BigReal direct = moebius::pullback_length_closed_form(w, *j.arc);
    row.length = complement ? two_pi - direct : direct;
    row.oracle_length = moebius::pullback_arc(m, complement ? j.arc->complement() : *j.arc).length();

    const moebius::DiskAutomorphism m_inv = m.inverse();
    CirclePoint limit = disk->p.rounded(prec).antipode();
    if (!complement) {
      // gamma / (p conj(gamma)) has angle 2 arg(gamma) - arg(p)
      const BigComplex gamma = w - disk->p.rounded(prec).embed();
      limit = CirclePoint(num::ldexp(num::arg(gamma), 1) - disk->p.angle().rounded(prec));
    }
    row.endpoint_distance = num::max(num::chordal_distance(m_inv.apply(j.arc->start()), limit),
                                     num::chordal_distance(m_inv.apply(j.arc->end()), limit));
    rows.push_back(std::move(row));
  }
  return rows;
}

bool tail_vanishes(const std::vector<BigReal>& values, const BigReal& threshold) {
  if (values.empty()) return false;
  const std::size_t from = values.size() - std::max<std::size_t>(values.size() / 3, 1);
  for (std::size_t k = from; k + 1 < values.size(); ++k) {
    const BigReal slack = num::abs(values[k]) * BigReal::parse("1e-9", values[k].prec());
    if (values[k + 1] > values[k] + slack) return false;
  }
  return values.back() < threshold;
}

ShrinkageReport pullback_shrinkage_check(const InnerFunction& f, const TargetSequence& t, PullbackMode mode, int n_max,
                                         const ShrinkageOptions& options) {
  if (n_max - options.n_min < 3) throw WindowTooShort("pullback shrinkage window needs at least 4 points");
  ShrinkageReport report;
  report.mode = mode;
  report.n_min = options.n_min;
  report.n_max = n_max;
  std::vector<BigReal> ratios;
  std::vector<BigReal> lengths;
  std::optional<BigReal> last_endpoint;
  report.max_oracle_gap = BigReal(options.policy.base_bits);
  for (PullbackRow& row : pullback_series(f, t, mode, options.n_min, n_max, options.policy)) {
    ShrinkageRow out;
    if (mode == PullbackMode::Complement) {
      out.hypothesis_ratio = row.radius.sign() > 0 ? row.distance / row.radius : BigReal::pow2(0, row.distance.prec());
    } else {
      out.hypothesis_ratio = row.radius / row.distance;
    }
    const BigReal gap = num::abs(row.length - row.oracle_length);
    const BigReal rel = row.oracle_length.is_zero() ? gap : gap / row.oracle_length;
    if (rel > report.max_oracle_gap) report.max_oracle_gap = rel;
    ratios.push_back(out.hypothesis_ratio);
    lengths.push_back(row.length);
    last_endpoint = row.endpoint_distance;
    out.pullback = std::move(row);
    report.rows.push_back(std::move(out));
  }
  report.hypothesis_holds = tail_vanishes(ratios, options.ratio_threshold);
  report.lengths_shrink = tail_vanishes(lengths, options.length_threshold);
  report.endpoints_converge = last_endpoint && *last_endpoint < options.endpoint_threshold;
  report.oracle_agrees = report.max_oracle_gap <= BigReal::pow2(-options.policy.agreement_tol_bits, 64);
  return report;
}

}  // namespace innerdyn::targets
