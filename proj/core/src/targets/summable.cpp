#include "innerdyn/targets/summable.hpp"

namespace innerdyn::targets {

const char* to_string(SummableMethod method) {
  switch (method) {
    case SummableMethod::Ratio:
      return "ratio";
    case SummableMethod::Comparison:
      return "comparison";
    case SummableMethod::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

SummableResult summable(const std::vector<BigReal>& lengths, int first_n, const SummableOptions& options) {
  SummableResult out;
  const int span = static_cast<int>(lengths.size()) - 1;
  if (span < options.min_span) {
    out.note = "window spans " + std::to_string(std::max(span, 0)) + " steps; at least " +
               std::to_string(options.min_span) + " needed";
    return out;
  }
  const std::size_t half = lengths.size() / 2;
  bool zero_tail = true;
  out.ratio_bound = BigReal(lengths.front().prec());
  for (std::size_t k = half; k + 1 < lengths.size(); ++k) {
    if (lengths[k].is_zero()) {
      if (!lengths[k + 1].is_zero()) zero_tail = false;
      continue;
    }
    zero_tail = false;
    const BigReal ratio = lengths[k + 1] / lengths[k];
    if (ratio > out.ratio_bound) out.ratio_bound = ratio;
  }
  if (zero_tail) {
    out.certificate = true;
    out.method = SummableMethod::Ratio;
    out.note = "lengths vanish on the last half of the window";
    return out;
  }
  if (out.ratio_bound <= options.ratio_ceiling) {
    out.certificate = true;
    out.method = SummableMethod::Ratio;
    return out;
  }
  if (options.majorant && options.majorant->ratio < 1L && options.majorant->ratio > 0L) {
    const GeometricMajorant& m = *options.majorant;
    for (std::size_t k = 0; k < lengths.size(); ++k) {
      const BigReal bound = m.coefficient * num::pow(m.ratio, first_n + static_cast<long>(k));
      if (lengths[k] > bound) {
        out.note = "majorant exceeded at n = " + std::to_string(first_n + static_cast<int>(k));
        return out;
      }
    }
    out.certificate = true;
    out.method = SummableMethod::Comparison;
    return out;
  }
  out.note = "ratio bound " + out.ratio_bound.to_string(6) + " above ceiling " + options.ratio_ceiling.to_string(6);
  return out;
}

}  // namespace innerdyn::targets
