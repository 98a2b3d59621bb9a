#pragma once

#include <optional>
#include <vector>

#include "innerdyn/targets/shrinkage.hpp"
#include "innerdyn/targets/summable.hpp"

namespace innerdyn::targets {

/// upper: J_n = D(p, alpha^((1-eps)n)) pulled back as complements;
/// lower: J_n = D(p, alpha^((1+eps)n)) pulled back directly.
enum class BoundVariant { Upper, Lower };

const char* to_string(BoundVariant variant);

struct BoundCheckOptions {
  PrecisionPolicy policy;
  /// Pinned values; estimated from f when absent.
  std::optional<CirclePoint> p;
  std::optional<BigReal> alpha;
  SummableOptions summable;
};

struct BoundRow {
  int n = 0;
  /// Excluded when the factor squared in the bound's denominator is not positive.
  bool excluded = false;
  BigReal length;
  /// Absent for excluded n.
  std::optional<BigReal> bound;
  bool holds = false;
};

struct BoundCheckReport {
  BoundVariant variant = BoundVariant::Upper;
  CirclePoint p;
  BigReal alpha;
  BigReal epsilon;
  BigReal c;
  int n0 = 0;
  int n_max = 0;
  std::vector<BoundRow> rows;
  std::vector<int> excluded;
  std::size_t violations = 0;
  SummableResult bound_summable;
  /// No violations among included n, and the bound sequence is certified summable.
  bool passed = false;
};

/// upper bound 2 C pi / (alpha^-n eps - 2C + C^2 alpha^n eps), valid where alpha^((1-eps)n) > C alpha^n;
/// lower bound 2 C pi / (alpha^n eps - 2C alpha^(n eps/3) + C^2 alpha^(-n eps/3)),
/// valid where C alpha^((1+eps/3)n) > alpha^((1+eps)n).
BigReal section4_bound(BoundVariant variant, const BigReal& alpha, const BigReal& epsilon, const BigReal& c, int n);
/// The unsquared factor whose positivity the bound needs, scaled by alpha^n.
BigReal section4_guard(BoundVariant variant, const BigReal& alpha, const BigReal& epsilon, const BigReal& c, int n);

/// |I_n| <= bound for n in [n0, n_max] with |I_n| from the sine identity.
BoundCheckReport section4_bound_check(const InnerFunction& f, const BigReal& epsilon, const BigReal& c,
                                      BoundVariant variant, int n0, int n_max, const BoundCheckOptions& options = {});

}  // namespace innerdyn::targets
