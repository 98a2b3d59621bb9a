#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "innerdyn/moebius/arc.hpp"

namespace innerdyn::targets {

using moebius::Arc;
using num::BigReal;
using num::Bits;
using num::CirclePoint;

enum class RadiusKind {
  Geometric,  // coefficient * base^(exponent * n)
  Constant,   // coefficient
  PowerLaw,   // coefficient * n^exponent
};

struct RadiusRule {
  RadiusKind kind = RadiusKind::Geometric;
  BigReal coefficient;
  BigReal base;
  BigReal exponent;

  BigReal at(int n, Bits prec) const;
};

/// J_n = D(p, r_n) intersected with the circle.
struct DiskRadius {
  CirclePoint p;
  RadiusRule radius;
};

/// J_n = arcs[n - 1].
struct ExplicitArcs {
  std::vector<Arc> arcs;
};

class TargetSequence;

struct ComplementOf {
  std::shared_ptr<const TargetSequence> base;
};

/// Declarative arc sequence n -> J_n, n >= 1.
class TargetSequence {
 public:
  using Variant = std::variant<DiskRadius, ExplicitArcs, ComplementOf>;

  static TargetSequence disk_radius(CirclePoint p, RadiusRule radius);
  static TargetSequence explicit_arcs(std::vector<Arc> arcs);
  static TargetSequence complement(TargetSequence base);

  const Variant& variant() const noexcept { return variant_; }
  /// The DiskRadius at the root of any complements, if there is one.
  const DiskRadius* disk() const noexcept;

 private:
  explicit TargetSequence(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

/// J_n as a set: empty, the whole circle, or a proper arc.
struct TargetArc {
  enum class Coverage { Empty, Partial, Full };
  Coverage coverage = Coverage::Empty;
  std::optional<Arc> arc;
  BigReal length;

  bool contains(const CirclePoint& zeta) const;
  TargetArc complement() const;
};

/// For DiskRadius the arc is centred at p with half-width 2 asin(r_n/2);
/// r_n >= 2 covers the circle, r_n <= 0 is empty.
TargetArc target_arc(const TargetSequence& t, int n, Bits prec);

/// |J_n| for n = 1..n_max; complements are 2 pi minus the base length.
std::vector<BigReal> target_lengths(const TargetSequence& t, int n_max, Bits prec);

/// zeta in J_n. When `distance` = |zeta - p| is supplied for a DiskRadius
/// sequence centred at that p, the test is distance < r_n.
bool target_contains(const TargetSequence& t, int n, const CirclePoint& zeta, const BigReal* distance = nullptr);

}  // namespace innerdyn::targets
