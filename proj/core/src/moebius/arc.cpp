#include "innerdyn/moebius/arc.hpp"

#include "innerdyn/errors.hpp"

namespace innerdyn::moebius {

Arc::Arc(CirclePoint start, CirclePoint end) : start_(std::move(start)), end_(std::move(end)) {
  if (start_ == end_) throw DomainError("degenerate arc: start equals end");
}

Arc Arc::centered(const CirclePoint& center, const BigReal& half_width) {
  if (half_width <= 0L || half_width >= BigReal::pi(half_width.prec())) {
    throw DomainError("centered arc requires half width in (0, pi)");
  }
  return {center.rotated(-half_width), center.rotated(half_width)};
}

BigReal Arc::length() const { return end_.offset_from(start_); }

bool Arc::contains(const CirclePoint& zeta) const { return zeta.offset_from(start_) < length(); }

CirclePoint Arc::midpoint() const { return start_.rotated(num::ldexp(length(), -1)); }

}  // namespace innerdyn::moebius
