#include "innerdyn/targets/target_sequence.hpp"

#include "innerdyn/errors.hpp"

namespace innerdyn::targets {

BigReal RadiusRule::at(int n, Bits prec) const {
  const BigReal c = coefficient.rounded(prec);
  switch (kind) {
    case RadiusKind::Constant:
      return c;
    case RadiusKind::Geometric:
      return c * num::pow(base.rounded(prec), exponent.rounded(prec) * static_cast<long>(n));
    case RadiusKind::PowerLaw:
      return c * num::pow(BigReal(static_cast<long>(n), prec), exponent.rounded(prec));
  }
  throw DomainError("unknown radius rule");
}

TargetSequence TargetSequence::disk_radius(CirclePoint p, RadiusRule radius) {
  return TargetSequence(DiskRadius{std::move(p), std::move(radius)});
}

TargetSequence TargetSequence::explicit_arcs(std::vector<Arc> arcs) {
  if (arcs.empty()) throw DomainError("explicit target sequence needs at least one arc");
  return TargetSequence(ExplicitArcs{std::move(arcs)});
}

TargetSequence TargetSequence::complement(TargetSequence base) {
  return TargetSequence(ComplementOf{std::make_shared<const TargetSequence>(std::move(base))});
}

const DiskRadius* TargetSequence::disk() const noexcept {
  if (const auto* d = std::get_if<DiskRadius>(&variant_)) return d;
  if (const auto* c = std::get_if<ComplementOf>(&variant_)) return c->base->disk();
  return nullptr;
}

bool TargetArc::contains(const CirclePoint& zeta) const {
  switch (coverage) {
    case Coverage::Empty:
      return false;
    case Coverage::Full:
      return true;
    case Coverage::Partial:
      return arc->contains(zeta);
  }
  return false;
}

TargetArc TargetArc::complement() const {
  const BigReal two_pi = BigReal::two_pi(length.prec());
  switch (coverage) {
    case Coverage::Empty:
      return {Coverage::Full, std::nullopt, two_pi};
    case Coverage::Full:
      return {Coverage::Empty, std::nullopt, BigReal(length.prec())};
    case Coverage::Partial:
      return {Coverage::Partial, arc->complement(), two_pi - length};
  }
  return *this;
}

TargetArc target_arc(const TargetSequence& t, int n, Bits prec) {
  if (n < 1) throw DomainError("target sequences are indexed from n = 1");
  if (const auto* d = std::get_if<DiskRadius>(&t.variant())) {
    const BigReal r = d->radius.at(n, prec);
    if (r <= 0L) return {TargetArc::Coverage::Empty, std::nullopt, BigReal(prec)};
    if (r >= 2L) return {TargetArc::Coverage::Full, std::nullopt, BigReal::two_pi(prec)};
    const BigReal half_width = num::ldexp(num::asin(num::ldexp(r, -1)), 1);
    Arc arc = Arc::centered(d->p.rounded(prec), half_width);
    return {TargetArc::Coverage::Partial, std::move(arc), num::ldexp(half_width, 1)};
  }
  if (const auto* e = std::get_if<ExplicitArcs>(&t.variant())) {
    if (static_cast<std::size_t>(n) > e->arcs.size()) {
      throw DomainError("explicit target sequence has no arc for n = " + std::to_string(n));
    }
    const Arc& arc = e->arcs[static_cast<std::size_t>(n - 1)];
    return {TargetArc::Coverage::Partial, arc, arc.length().rounded(prec)};
  }
  return target_arc(*std::get<ComplementOf>(t.variant()).base, n, prec).complement();
}

std::vector<BigReal> target_lengths(const TargetSequence& t, int n_max, Bits prec) {
  if (n_max < 1) throw DomainError("target_lengths needs n_max >= 1");
  std::vector<BigReal> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) out.push_back(target_arc(t, n, prec).length);
  return out;
}

bool target_contains(const TargetSequence& t, int n, const CirclePoint& zeta, const BigReal* distance) {
  if (distance) {
    if (const auto* d = std::get_if<DiskRadius>(&t.variant())) return *distance < d->radius.at(n, distance->prec());
    if (const auto* c = std::get_if<ComplementOf>(&t.variant())) {
      if (c->base->disk()) return !target_contains(*c->base, n, zeta, distance);
    }
  }
  return target_arc(t, n, zeta.prec()).contains(zeta);
}

}  // namespace innerdyn::targets
