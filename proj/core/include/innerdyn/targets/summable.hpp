#pragma once

#include <optional>
#include <string>
#include <vector>

#include "innerdyn/numerics/big_real.hpp"

namespace innerdyn::targets {

using num::BigReal;

/// K q^n dominating a length sequence term by term.
struct GeometricMajorant {
  BigReal coefficient;
  BigReal ratio;
};

struct SummableOptions {
  /// A ratio bound above this is not accepted as a certificate.
  BigReal ratio_ceiling = BigReal::parse("0.95", 64);
  std::optional<GeometricMajorant> majorant;
  /// Minimum n_max - n0.
  int min_span = 20;
};

enum class SummableMethod { Ratio, Comparison, Inconclusive };

struct SummableResult {
  bool certificate = false;
  /// max length(n+1)/length(n) over the last half of the window.
  BigReal ratio_bound;
  SummableMethod method = SummableMethod::Inconclusive;
  std::string note;
};

/// Summability certificate for lengths indexed n = first_n, first_n + 1, ...
/// by ratio domination on the last half of the window, falling back to
/// comparison with options.majorant (which must have ratio < 1).
/// Windows shorter than options.min_span are inconclusive.
SummableResult summable(const std::vector<BigReal>& lengths, int first_n = 1, const SummableOptions& options = {});

const char* to_string(SummableMethod method);

}  // namespace innerdyn::targets
