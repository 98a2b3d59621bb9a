#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "innerdyn/errors.hpp"
#include "innerdyn/numerics/big_real.hpp"

namespace innerdyn::num {

/// Working-precision schedule for a replayable computation.
struct PrecisionPolicy {
  Bits base_bits = 256;
  Bits max_bits = 4096;
  /// Two runs agree when they differ by less than 2^-agreement_tol_bits.
  Bits agreement_tol_bits = 64;

  /// Throws DomainError unless 64 <= base_bits <= max_bits and the tolerance is positive.
  void validate() const;

  /// Precisions tried by escalate: start, 2*start, ... capped at max_bits.
  /// `start` defaults to base_bits and is clamped into [base_bits, max_bits].
  std::vector<Bits> schedule(Bits start = 0) const;

  friend bool operator==(const PrecisionPolicy&, const PrecisionPolicy&) = default;
};

/// Thrown by a computation to request the next precision in the schedule
/// (its result would be meaningless at the current one).
class NeedMorePrecision : public Error {
 public:
  using Error::Error;
};

template <class T>
struct Escalated {
  T value;
  /// Lower precision of the first agreeing pair of runs.
  Bits bits_used;
};

/// Runs `computation(bits)` at successively doubled precisions until two
/// consecutive results satisfy `agree(lower, higher, tol_bits)`.
///
/// Returns the higher-precision result of the agreeing pair. Throws
/// PrecisionExhausted if max_bits is reached without agreement.
template <class Computation, class Agree>
auto escalate(Computation&& computation, const PrecisionPolicy& policy, Agree&& agree, Bits start_bits = 0)
    -> Escalated<std::decay_t<std::invoke_result_t<Computation&, Bits>>> {
  using T = std::decay_t<std::invoke_result_t<Computation&, Bits>>;
  policy.validate();
  std::optional<T> previous;
  Bits previous_bits = 0;
  for (const Bits bits : policy.schedule(start_bits)) {
    std::optional<T> current;
    try {
      current.emplace(std::invoke(computation, bits));
    } catch (const NeedMorePrecision&) {
      previous.reset();
      continue;
    }
    if (previous && std::invoke(agree, *previous, *current, policy.agreement_tol_bits)) {
      return {std::move(*current), previous_bits};
    }
    previous = std::move(current);
    previous_bits = bits;
  }
  throw PrecisionExhausted("no agreement between consecutive runs up to " + std::to_string(policy.max_bits) + " bits",
                           policy.max_bits);
}

/// |a - b| < 2^-tol_bits.
bool absolute_agreement(const BigReal& a, const BigReal& b, Bits tol_bits);

/// escalate with absolute agreement of real results.
template <class Computation>
Escalated<BigReal> escalate(Computation&& computation, const PrecisionPolicy& policy, Bits start_bits = 0) {
  return escalate(std::forward<Computation>(computation), policy,
                  [](const BigReal& a, const BigReal& b, Bits tol) { return absolute_agreement(a, b, tol); },
                  start_bits);
}

}  // namespace innerdyn::num
