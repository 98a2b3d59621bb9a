#include "innerdyn/cli/runner.hpp"

#include <ostream>

#include "innerdyn/cli/function_builder.hpp"
#include "innerdyn/dynamics/rate.hpp"
#include "innerdyn/dynamics/theorem_a.hpp"
#include "innerdyn/errors.hpp"
#include "innerdyn/inner/regions.hpp"
#include "innerdyn/moebius/pullback.hpp"
#include "innerdyn/numerics/sampling.hpp"
#include "innerdyn/targets/bound_check.hpp"
#include "innerdyn/targets/hits.hpp"
#include "innerdyn/targets/shrinkage.hpp"

namespace innerdyn::cli {

namespace {

using dynamics::OrbitRecord;
using inner::InnerFunction;
using num::BigComplex;

const char* to_string(dynamics::SampleStatus s) {
  switch (s) {
    case dynamics::SampleStatus::Determinate:
      return "determinate";
    case dynamics::SampleStatus::Singular:
      return "singular";
    case dynamics::SampleStatus::Indeterminate:
      return "indeterminate";
  }
  return "";
}

int checked_int(const ExperimentConfig& c, const std::string& key, long fallback, long min) {
  const long v = c.integer_or(key, fallback);
  if (v < min) throw ConfigError("key '" + key + "': must be at least " + std::to_string(min));
  return static_cast<int>(v);
}

CirclePoint resolve_p(const ExperimentConfig& c, const InnerFunction& f, ExperimentReport& r) {
  const bool pinned = c.has("p");
  const CirclePoint p = pinned ? *c.optional_point("p") : dynamics::estimate_p(f, c.policy());
  r.scalar("p_angle", p.angle());
  r.scalar("p_estimated", !pinned);
  return p;
}

BigReal resolve_alpha(const ExperimentConfig& c, const InnerFunction& f, const CirclePoint& p, ExperimentReport& r) {
  const bool pinned = c.has("alpha");
  const BigReal alpha = pinned ? c.decimal("alpha") : dynamics::estimate_alpha(f, p, c.policy());
  r.scalar("alpha", alpha);
  r.scalar("alpha_estimated", !pinned);
  return alpha;
}

void record_truncation(const OrbitRecord& record, ExperimentReport& r) {
  r.max_bits_used = std::max<long>(r.max_bits_used, record.bits_used);
  if (!record.truncated) return;
  r.healthy = false;
  r.errors.push_back({std::nullopt, record.truncated->at, record.truncated->detail});
}

Series orbit_series(const OrbitRecord& record, bool one_minus_modulus) {
  Series s;
  for (std::size_t n = 0; n < record.points.size(); ++n) {
    s.add(static_cast<long>(n), one_minus_modulus ? record.points[n].one_minus_modulus : record.points[n].distance_to_p);
  }
  return s;
}

OrbitRecord complete_interior_orbit(const InnerFunction& f, int n_max, const ExperimentConfig& c, const CirclePoint& p,
                                    ExperimentReport& r) {
  OrbitRecord record = dynamics::interior_orbit(f, n_max, c.policy(), p);
  record_truncation(record, r);
  return record;
}

void run_orbit(const ExperimentConfig& c, ExperimentReport& r) {
  const InnerFunction f = build_function(c);
  const int n_max = checked_int(c, "n_max", 0, 1);
  const CirclePoint p = resolve_p(c, f, r);
  OrbitRecord record;
  if (const auto start = c.optional_point("start")) {
    record = dynamics::boundary_orbit(f, *start, n_max, c.policy(), p);
    r.scalar("orbit", "boundary");
  } else {
    record = dynamics::interior_orbit(f, n_max, c.policy(), p);
    r.scalar("orbit", "interior");
    r.series["one_minus_modulus"] = orbit_series(record, true);
  }
  record_truncation(record, r);
  r.scalar("points", record.points.size());
  r.scalar("complete", record.complete());
  r.scalar("bits_used", record.bits_used);
  r.series["distance_to_p"] = orbit_series(record, false);
}

void run_rate(const ExperimentConfig& c, ExperimentReport& r) {
  const InnerFunction f = build_function(c);
  const int n_max = checked_int(c, "n_max", 0, 1);
  const CirclePoint p = resolve_p(c, f, r);
  const BigReal alpha = resolve_alpha(c, f, p, r);
  const OrbitRecord record = complete_interior_orbit(f, n_max, c, p, r);
  const dynamics::RateReport rate =
      dynamics::verify_rate_bounds(record, alpha, c.decimal_or("delta", "0"), checked_int(c, "n0", 10, 0));
  r.scalar("delta", rate.delta);
  r.scalar("n0", rate.n_min);
  r.scalar("n_last", rate.n_max);
  r.scalar("c_upper", rate.c_upper);
  r.scalar("c_lower", rate.c_lower);
  r.scalar("upper_stable", rate.upper_stable);
  r.scalar("lower_stable", rate.lower_stable);
  r.scalar("satisfied", rate.satisfied);
  Series d, up, low;
  for (const dynamics::RateRow& row : rate.rows) {
    d.add(row.n, row.distance);
    up.add(row.n, row.upper_ratio);
    low.add(row.n, row.lower_ratio);
  }
  r.series["distance_to_p"] = std::move(d);
  r.series["upper_ratio"] = std::move(up);
  r.series["lower_ratio"] = std::move(low);
}

void run_summability(const ExperimentConfig& c, ExperimentReport& r) {
  const InnerFunction f = build_function(c);
  const int n_max = checked_int(c, "n_max", 0, 1);
  const CirclePoint p = resolve_p(c, f, r);
  if (c.has("alpha")) resolve_alpha(c, f, p, r);
  const OrbitRecord record = complete_interior_orbit(f, n_max, c, p, r);
  if (!record.complete()) return;
  const dynamics::SummabilityResult s = dynamics::summability_check(record, n_max, checked_int(c, "n0", 10, 0));
  r.scalar("n0", s.n_min);
  r.scalar("horizon", s.horizon);
  r.scalar("ratio_bound", s.ratio_bound);
  r.scalar("certificate", s.geometric_tail_certificate);
  r.scalar("partial_sum", s.partial_sums.back());
  Series terms, sums;
  for (std::size_t n = 0; n < s.terms.size(); ++n) {
    terms.add(static_cast<long>(n), s.terms[n]);
    sums.add(static_cast<long>(n), s.partial_sums[n]);
  }
  r.series["one_minus_modulus"] = std::move(terms);
  r.series["partial_sum"] = std::move(sums);
}

void run_theorem_a(const ExperimentConfig& c, const RunOptions& o, ExperimentReport& r) {
  const InnerFunction f = build_function(c);
  dynamics::TheoremAConfig tc;
  tc.epsilon = c.decimal("epsilon");
  tc.samples = c.unsigned_integer("samples");
  tc.seed = c.unsigned_integer("seed");
  tc.n_enter = checked_int(c, "n_enter", 0, 1);
  tc.n_max = checked_int(c, "n_max", 0, 2);
  tc.policy = c.policy();
  tc.p = c.optional_point("p");
  tc.alpha = c.optional_decimal("alpha");
  tc.workers = o.workers;
  if (c.has("max_excluded_fraction")) tc.max_excluded_fraction = c.decimal("max_excluded_fraction");
  const dynamics::TheoremAReport t = dynamics::theorem_a_experiment(f, tc);

  r.scalar("p_angle", t.p.angle());
  r.scalar("p_estimated", t.p_estimated);
  r.scalar("alpha", t.alpha);
  r.scalar("alpha_estimated", t.alpha_estimated);
  r.scalar("epsilon", t.epsilon);
  r.scalar("n_enter", t.n_enter);
  r.scalar("n_max", t.n_max);
  r.scalar("samples", t.samples);
  r.scalar("seed", t.seed);
  r.scalar("start_bits", t.start_bits);
  r.scalar("eventually_count", t.eventually_count);
  r.scalar("eventually_fraction", t.eventually_fraction());
  r.scalar("singular", t.singular);
  r.scalar("indeterminate", t.indeterminate);
  r.scalar("denominator", t.denominator);
  Series containment;
  for (int n = t.n_enter; n <= t.n_max; ++n) containment.add(n, t.containment_fraction(n));
  r.series["containment_fraction"] = std::move(containment);

  r.healthy = t.healthy;
  r.rejected = t.singular + t.indeterminate;
  r.max_bits_used = t.max_bits_used;
  if (!t.healthy) {
    r.errors.push_back({std::nullopt, std::nullopt,
                        "unhealthy run: " + std::to_string(r.rejected) + " of " + std::to_string(t.samples) +
                            " samples rejected"});
  }
  for (const dynamics::SampleOutcome& s : t.outcomes) {
    if (s.status == dynamics::SampleStatus::Determinate) continue;
    r.errors.push_back({s.index, s.truncated_at, std::string(to_string(s.status)) + ": " + s.detail});
  }
  if (t.samples <= c.unsigned_or("outcomes_limit", 0)) {
    Json list = Json::array();
    for (const dynamics::SampleOutcome& s : t.outcomes) {
      list.push_back({{"sample", s.index}, {"status", to_string(s.status)}, {"eventually", s.eventually},
                      {"bits_used", s.bits_used}});
    }
    r.outcomes = std::move(list);
  }
}

targets::TargetSequence build_target(const ExperimentConfig& c, const CirclePoint& p) {
  const std::string rule = c.text("target.radius.rule");
  targets::RadiusRule radius;
  radius.kind = rule == "geometric"  ? targets::RadiusKind::Geometric
                : rule == "constant" ? targets::RadiusKind::Constant
                                     : targets::RadiusKind::PowerLaw;
  radius.coefficient = c.decimal("target.radius.coefficient");
  radius.base = c.decimal_or("target.radius.base", "1");
  radius.exponent = c.decimal_or("target.radius.exponent", "1");
  const CirclePoint center = c.has("target.center") ? *c.optional_point("target.center") : p;
  targets::TargetSequence t = targets::TargetSequence::disk_radius(center, radius);
  if (c.flag_or("target.complement", false)) t = targets::TargetSequence::complement(std::move(t));
  return t;
}

void add_summable(const targets::SummableResult& s, const std::string& prefix, ExperimentReport& r) {
  r.scalar(prefix + "certificate", s.certificate);
  r.scalar(prefix + "ratio_bound", s.ratio_bound);
  r.scalar(prefix + "method", targets::to_string(s.method));
  if (!s.note.empty()) r.scalar(prefix + "note", s.note);
}

void run_targets(const ExperimentConfig& c, const RunOptions& o, ExperimentReport& r) {
  const InnerFunction f = build_function(c);
  const int horizon = checked_int(c, "horizon", 0, 1);
  const CirclePoint p = resolve_p(c, f, r);
  const targets::TargetSequence t = build_target(c, p);
  const PrecisionPolicy policy = c.policy();

  const int n0 = checked_int(c, "n0", 10, 1);
  if (n0 > horizon) throw ConfigError("key 'n0': must not exceed horizon");
  const std::vector<BigReal> lengths = targets::target_lengths(t, horizon, policy.base_bits);
  const std::vector<BigReal> window(lengths.begin() + (n0 - 1), lengths.end());
  add_summable(targets::summable(window, n0), "lengths_summable_", r);

  targets::HitsOptions ho;
  ho.p = p;
  ho.workers = o.workers;
  if (c.has("max_excluded_fraction")) ho.max_excluded_fraction = c.decimal("max_excluded_fraction");
  const targets::HitReport h =
      targets::hits(f, t, c.unsigned_integer("samples"), c.unsigned_integer("seed"), horizon, policy, ho);
  r.scalar("n0", n0);
  r.scalar("horizon", horizon);
  r.scalar("samples", h.samples);
  r.scalar("start_bits", h.start_bits);
  r.scalar("singular", h.singular);
  r.scalar("indeterminate", h.indeterminate);
  r.scalar("denominator", h.denominator);
  r.scalar("fraction_hitting_after_n0", h.fraction_hitting_after(n0));
  Series fractions, lens;
  for (int n = 0; n <= horizon; ++n) fractions.add(n, h.fraction_hitting_after(n));
  for (int n = 1; n <= horizon; ++n) lens.add(n, lengths[static_cast<std::size_t>(n - 1)]);
  r.series["fraction_hitting_after"] = std::move(fractions);
  r.series["target_length"] = std::move(lens);

  r.healthy = h.healthy;
  r.rejected = h.singular + h.indeterminate;
  for (const targets::SampleHits& s : h.outcomes) {
    if (s.status != dynamics::SampleStatus::Determinate) {
      r.errors.push_back({s.index, std::nullopt, std::string(to_string(s.status)) + ": " + s.detail});
    }
  }
  if (h.samples <= c.unsigned_or("outcomes_limit", 0)) {
    Json list = Json::array();
    for (const targets::SampleHits& s : h.outcomes) {
      list.push_back({{"sample", s.index}, {"status", to_string(s.status)}, {"hit_times", s.hit_times}});
    }
    r.outcomes = std::move(list);
  }
}

void run_pullback_check(const ExperimentConfig& c, ExperimentReport& r) {
  const InnerFunction f = build_function(c);
  const CirclePoint p = resolve_p(c, f, r);
  if (c.flag_or("target.complement", false)) throw ConfigError("key 'target.complement': pullback-check uses mode instead");
  const targets::TargetSequence t = build_target(c, p);
  const targets::PullbackMode mode =
      c.text("mode") == "complement" ? targets::PullbackMode::Complement : targets::PullbackMode::Direct;
  targets::ShrinkageOptions so;
  so.n_min = checked_int(c, "n0", 10, 1);
  so.policy = c.policy();
  const targets::ShrinkageReport s = targets::pullback_shrinkage_check(f, t, mode, checked_int(c, "n_max", 0, 1), so);

  r.scalar("mode", targets::to_string(s.mode));
  r.scalar("n0", s.n_min);
  r.scalar("n_max", s.n_max);
  r.scalar("hypothesis_holds", s.hypothesis_holds);
  r.scalar("lengths_shrink", s.lengths_shrink);
  r.scalar("endpoints_converge", s.endpoints_converge);
  r.scalar("oracle_agrees", s.oracle_agrees);
  r.scalar("max_oracle_gap", s.max_oracle_gap);
  const targets::ShrinkageRow& last = s.rows.back();
  r.scalar("final_hypothesis_ratio", last.hypothesis_ratio);
  r.scalar("final_pullback_length", last.pullback.length);
  if (last.pullback.endpoint_distance) r.scalar("final_endpoint_distance", *last.pullback.endpoint_distance);
  Series ratio, length, endpoint, distance;
  for (const targets::ShrinkageRow& row : s.rows) {
    ratio.add(row.pullback.n, row.hypothesis_ratio);
    length.add(row.pullback.n, row.pullback.length);
    distance.add(row.pullback.n, row.pullback.distance);
    if (row.pullback.endpoint_distance) endpoint.add(row.pullback.n, *row.pullback.endpoint_distance);
  }
  r.series["hypothesis_ratio"] = std::move(ratio);
  r.series["pullback_length"] = std::move(length);
  r.series["endpoint_distance"] = std::move(endpoint);
  r.series["distance_to_p"] = std::move(distance);
  if (!s.hypothesis_holds) {
    r.errors.push_back({std::nullopt, std::nullopt, "hypothesis fails: the ratio does not decay below threshold"});
  }
}

void run_bound_check(const ExperimentConfig& c, ExperimentReport& r) {
  const InnerFunction f = build_function(c);
  const CirclePoint p = resolve_p(c, f, r);
  const BigReal alpha = resolve_alpha(c, f, p, r);
  const int n0 = checked_int(c, "n0", 10, 1);
  const int n_max = checked_int(c, "n_max", 0, n0 + 1);
  BigReal constant;
  if (c.has("c")) {
    constant = c.decimal("c");
    r.scalar("c_source", "config");
  } else {
    // measured rate constants on [10, n_max], scaled by the declared safety factor
    const OrbitRecord record = complete_interior_orbit(f, n_max, c, p, r);
    const dynamics::RateReport rate = dynamics::verify_rate_bounds(record, alpha, c.decimal_or("delta", "0"), 10);
    const BigReal safety = c.decimal_or("c_safety", "2");
    constant = num::max(rate.c_upper, rate.c_lower) * safety;
    r.scalar("c_source", "rate");
    r.scalar("c_upper", rate.c_upper);
    r.scalar("c_lower", rate.c_lower);
    r.scalar("c_safety", safety);
  }
  r.scalar("c", constant);
  const targets::BoundVariant variant =
      c.text("variant") == "upper" ? targets::BoundVariant::Upper : targets::BoundVariant::Lower;
  targets::BoundCheckOptions bo;
  bo.policy = c.policy();
  bo.p = p;
  bo.alpha = alpha;
  const targets::BoundCheckReport b =
      targets::section4_bound_check(f, c.decimal("epsilon"), constant, variant, n0, n_max, bo);

  r.scalar("variant", targets::to_string(b.variant));
  r.scalar("epsilon", b.epsilon);
  r.scalar("n0", b.n0);
  r.scalar("n_max", b.n_max);
  r.scalar("excluded", b.excluded);
  r.scalar("violations", b.violations);
  add_summable(b.bound_summable, "bound_summable_", r);
  r.scalar("passed", b.passed);
  Series paired, length, bound;
  paired.columns = {"pullback_length", "bound"};
  for (const targets::BoundRow& row : b.rows) {
    length.add(row.n, row.length);
    if (!row.bound) continue;
    bound.add(row.n, *row.bound);
    paired.rows.push_back({row.n, {row.length, *row.bound}});
  }
  r.series["pullback_length_vs_bound"] = std::move(paired);
  r.series["pullback_length"] = std::move(length);
  r.series["bound"] = std::move(bound);
  for (const int n : b.excluded) {
    r.errors.push_back({std::nullopt, n, "denominator nonpositive; n excluded from the check"});
  }
}

void run_arc_identity(const ExperimentConfig& c, ExperimentReport& r) {
  const std::uint64_t samples = c.unsigned_integer("samples");
  const std::uint64_t seed = c.unsigned_integer("seed");
  const Bits prec = c.policy().base_bits;
  const BigReal w_max = c.decimal_or("w_max", "0.99").rounded(prec);
  if (!(w_max > 0L) || !(w_max < 1L)) throw ConfigError("key 'w_max': must lie in (0, 1)");
  const long tol_bits = checked_int(c, "tolerance_bits", 100, 1);
  const BigReal tol = BigReal::pow2(-tol_bits, prec);
  const BigReal two_pi = BigReal::two_pi(prec);
  const BigReal min_frac = BigReal::parse("0.01", prec);
  const BigReal span_frac = BigReal::parse("0.98", prec);

  std::size_t violations = 0;
  BigReal max_gap(prec);
  Series gaps;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const BigReal radius = w_max * num::sqrt(num::uniform_unit({seed, i, 1}, prec));
    const BigComplex w = BigComplex::polar(radius, two_pi * num::uniform_unit({seed, i, 2}, prec));
    const CirclePoint start(two_pi * num::uniform_unit({seed, i, 3}, prec));
    const BigReal length = two_pi * (num::uniform_unit({seed, i, 4}, prec) * span_frac + min_frac);
    const moebius::Arc j(start, start.rotated(length));
    try {
      const BigReal closed = moebius::pullback_length_closed_form(w, j);
      const BigReal oracle = moebius::pullback_arc(moebius::normalizer(w), j).length();
      const BigReal gap = num::abs(closed - oracle);
      if (gap > max_gap) max_gap = gap;
      if (gap > tol) ++violations;
      gaps.add(static_cast<long>(i), gap);
    } catch (const FormulaOutOfRange& e) {
      ++violations;
      r.errors.push_back({i, std::nullopt, e.what()});
    }
  }
  r.scalar("samples", samples);
  r.scalar("bits", prec);
  r.scalar("w_max", w_max);
  r.scalar("tolerance_bits", tol_bits);
  r.scalar("max_gap", max_gap);
  r.scalar("violations", violations);
  r.series["gap"] = std::move(gaps);
}

void run_wolff(const ExperimentConfig& c, ExperimentReport& r) {
  const InnerFunction f = build_function(c);
  const CirclePoint p = resolve_p(c, f, r);
  const BigReal alpha = resolve_alpha(c, f, p, r);
  const std::uint64_t samples = c.unsigned_integer("samples");
  const std::uint64_t seed = c.unsigned_integer("seed");
  const Bits prec = c.policy().base_bits;
  const long slack_bits = checked_int(c, "slack_bits", 40, 1);
  const BigReal slack = BigReal::pow2(-slack_bits, prec) + 1L;
  r.scalar("samples", samples);
  r.scalar("slack_bits", slack_bits);

  std::size_t total = 0;
  Json per_eta = Json::array();
  Series worst;
  long index = 0;
  for (const BigReal& eta : c.decimal_list("eta")) {
    if (!(eta > 0L)) throw ConfigError("key 'eta': values must be positive");
    const inner::WolffRegion region(p.rounded(prec), eta.rounded(prec));
    const inner::WolffRegion image_region(p.rounded(prec), alpha.rounded(prec) * eta.rounded(prec) * slack);
    std::size_t violations = 0;
    // largest |p - f(z)|^2 / (alpha eta (1 - |f(z)|^2)); below 1 + slack means the image is inside
    BigReal max_ratio(prec);
    for (std::uint64_t i = 0; i < samples; ++i) {
      const BigComplex z = inner::sample_wolff(region, seed, i, prec);
      try {
        const BigComplex image = inner::eval_interior(f, z);
        if (!inner::in_wolff(image, image_region)) ++violations;
        const BigReal ratio = num::norm(image - p.rounded(prec).embed()) /
                              ((1L - num::norm(image)) * alpha.rounded(prec) * eta.rounded(prec));
        if (ratio > max_ratio) max_ratio = ratio;
      } catch (const Error& e) {
        ++violations;
        r.healthy = false;
        r.errors.push_back({i, std::nullopt, e.what()});
      }
    }
    total += violations;
    per_eta.push_back({{"eta", format_number(eta.rounded(prec))},
                       {"violations", violations},
                       {"max_ratio", format_number(max_ratio)}});
    worst.add(index++, max_ratio);
  }
  r.scalar("regions", per_eta);
  r.scalar("violations", total);
  worst.columns = {"max_ratio"};
  r.series["max_ratio"] = std::move(worst);
}

}  // namespace

ExperimentReport run(const ExperimentConfig& config, const RunOptions& options) {
  ExperimentReport r;
  r.config = config;
  switch (config.kind()) {
    case ExperimentKind::Orbit:
      run_orbit(config, r);
      break;
    case ExperimentKind::Rate:
      run_rate(config, r);
      break;
    case ExperimentKind::Summability:
      run_summability(config, r);
      break;
    case ExperimentKind::TheoremA:
      run_theorem_a(config, options, r);
      break;
    case ExperimentKind::Targets:
      run_targets(config, options, r);
      break;
    case ExperimentKind::PullbackCheck:
      run_pullback_check(config, r);
      break;
    case ExperimentKind::BoundCheck:
      run_bound_check(config, r);
      break;
    case ExperimentKind::ArcIdentity:
      run_arc_identity(config, r);
      break;
    case ExperimentKind::Wolff:
      run_wolff(config, r);
      break;
  }
  return r;
}

int execute(const ExperimentConfig& config, const RunOptions& options, std::optional<std::filesystem::path> out,
            std::ostream& log) {
  if (!out && config.has("out")) out = config.text("out");
  ExperimentReport report;
  try {
    report = run(config, options);
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    log << "invalid parameters: " << e.what() << "\n";
    return kExitUsage;
  } catch (const WindowTooShort& e) {
    log << "invalid parameters: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    // the run itself failed (no convergence, precision exhausted): record it as an unhealthy report
    log << "run failed: " << e.what() << "\n";
    report = ExperimentReport{};
    report.config = config;
    report.healthy = false;
    report.errors.push_back({std::nullopt, std::nullopt, e.what()});
  }
  if (out) {
    try {
      write_report(report, *out);
    } catch (const Error& e) {
      log << "output error: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  for (const ReportError& e : report.errors) {
    if (!e.sample) log << "note: " << e.message << "\n";
  }
  return report.healthy ? kExitHealthy : kExitUnhealthy;
}

}  // namespace innerdyn::cli
