#include "innerdyn/numerics/precision.hpp"

namespace innerdyn::num {

void PrecisionPolicy::validate() const {
  if (base_bits < kMinBits) throw DomainError("precision policy: base_bits must be >= 64");
  if (max_bits < base_bits) throw DomainError("precision policy: max_bits must be >= base_bits");
  if (agreement_tol_bits <= 0) throw DomainError("precision policy: agreement_tol_bits must be positive");
}

std::vector<Bits> PrecisionPolicy::schedule(Bits start) const {
  Bits bits = std::clamp(start == 0 ? base_bits : start, base_bits, max_bits);
  std::vector<Bits> out{bits};
  while (bits < max_bits) {
    bits = std::min(bits * 2, max_bits);
    out.push_back(bits);
  }
  return out;
}

bool absolute_agreement(const BigReal& a, const BigReal& b, Bits tol_bits) {
  if (!a.is_finite() || !b.is_finite()) return false;
  return abs(a - b) < BigReal::pow2(-tol_bits, std::max(a.prec(), b.prec()));
}

}  // namespace innerdyn::num
