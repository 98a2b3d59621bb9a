#pragma once

#include <algorithm>

#include "innerdyn/numerics/circle_point.hpp"

namespace innerdyn::moebius {

using num::BigReal;
using num::Bits;
using num::CirclePoint;

/// Half-open counterclockwise arc [start, end) of the unit circle.
///
/// Half-openness makes an arc and its complement an exact partition of the
/// circle, so hit counting never has to decide about shared endpoints.
class Arc {
 public:
  /// Throws DomainError if start == end (length must lie in (0, 2*pi)).
  Arc(CirclePoint start, CirclePoint end);
  /// Arc of total length 2*half_width centred at `center`; half_width in (0, pi).
  static Arc centered(const CirclePoint& center, const BigReal& half_width);

  const CirclePoint& start() const noexcept { return start_; }
  const CirclePoint& end() const noexcept { return end_; }
  Bits prec() const noexcept { return std::max(start_.prec(), end_.prec()); }

  BigReal length() const;
  bool contains(const CirclePoint& zeta) const;
  Arc complement() const { return {end_, start_}; }
  CirclePoint midpoint() const;

 private:
  CirclePoint start_;
  CirclePoint end_;
};

}  // namespace innerdyn::moebius
