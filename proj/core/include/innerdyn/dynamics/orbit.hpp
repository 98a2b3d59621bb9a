#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "innerdyn/inner/inner_function.hpp"
#include "innerdyn/numerics/precision.hpp"

namespace innerdyn::dynamics {

using inner::InnerFunction;
using num::BigComplex;
using num::BigReal;
using num::Bits;
using num::CirclePoint;
using num::PrecisionPolicy;

enum class OrbitKind { Interior, Boundary };

enum class TruncationReason { SingularPoint, PrecisionExhausted };

struct Truncation {
  /// First step that could not be produced.
  int at;
  TruncationReason reason;
  std::string detail;
};

struct OrbitPoint {
  /// f^n(0) for interior orbits, (f*)^n(zeta) for boundary orbits.
  std::variant<BigComplex, CirclePoint> value;
  BigReal distance_to_p;
  /// 1 - |f^n(0)|; zero on boundary orbits.
  BigReal one_minus_modulus;
  Bits bits_used;
};

/// Orbit indexed by n = 0, 1, ... with per-run precision metadata.
///
/// Engines never throw for a singular hit or exhausted precision; they return
/// the valid prefix with `truncated` set. require_complete() converts that
/// into the corresponding SingularPoint or PrecisionExhausted error.
struct OrbitRecord {
  OrbitKind kind = OrbitKind::Interior;
  CirclePoint p;
  std::vector<OrbitPoint> points;
  std::optional<Truncation> truncated;
  /// Lower precision of the agreeing pair of runs (the last precision tried if none agreed).
  Bits bits_used = 0;
  Bits max_bits_tried = 0;

  bool complete() const noexcept { return !truncated.has_value(); }
  void require_complete() const;
};

/// f^n(0), n = 0..n_max, escalated until every distance |f^n(0) - p| agrees
/// between two precisions to a relative 2^-agreement_tol_bits.
OrbitRecord interior_orbit(const InnerFunction& f, int n_max, const PrecisionPolicy& policy, const CirclePoint& p,
                           Bits start_bits = 0);

/// The starting point as a function of the working precision, so that a
/// random sample can be refined rather than zero-padded.
using StartPoint = std::function<CirclePoint(Bits)>;

/// (f*)^n(zeta), n = 0..n_max. The whole orbit is replayed at doubled
/// precision until all distances to p agree as for interior_orbit.
OrbitRecord boundary_orbit(const InnerFunction& f, const StartPoint& start, int n_max, const PrecisionPolicy& policy,
                           const CirclePoint& p, Bits start_bits = 0);
OrbitRecord boundary_orbit(const InnerFunction& f, const CirclePoint& zeta, int n_max, const PrecisionPolicy& policy,
                           const CirclePoint& p, Bits start_bits = 0);

/// |a - b| <= 2^-tol_bits * |b|.
bool relative_agreement(const BigReal& a, const BigReal& b, Bits tol_bits);

}  // namespace innerdyn::dynamics
