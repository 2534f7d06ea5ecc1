#include "hjrelax/godunov.hpp"

#include <algorithm>

#include "hjrelax/relaxation.hpp"

namespace hjrelax {

namespace {

PLFunction upgrade_if_needed(const PLFunction& H, const PLFunction& F0, bool envelope_fallback) {
  if (!F0.is_nonincreasing()) throw InvalidBoundary();
  if (F0.is_semicoercive()) return F0;
  if (!envelope_fallback) throw NotSemiCoercive();
  return pointwise_max(F0, lower_envelope(H));
}

// F non-increasing, profile non-decreasing: {F = profile} is one closed
// interval; return the value of F there (constant on it by monotonicity).
Rational monotone_intersection_value(const PLFunction& F, const PLFunction& profile, Rational* q_lo,
                                     Rational* q_hi) {
  auto zs = zero_set(subtract(F, profile));
  if (zs.empty()) throw RootNotFound("no intersection of the boundary function with the flux profile");
  if (zs.size() != 1)
    throw InternalMismatch("intersection of monotone functions must be a single component");
  if (!zs[0].lo.is_finite() || !zs[0].hi.is_finite())
    throw InternalMismatch("unbounded intersection of the boundary function with the flux profile");
  Rational v_lo = F.eval(zs[0].lo.finite());
  Rational v_hi = F.eval(zs[0].hi.finite());
  if (v_lo != v_hi)
    throw InternalMismatch("the intersection value must be independent of the witness");
  if (q_lo) *q_lo = zs[0].lo.finite();
  if (q_hi) *q_hi = zs[0].hi.finite();
  return v_lo;
}

}  // namespace

Rational godunov_flux(const PLFunction& H, const Rational& q, const Rational& p) {
  if (!H.is_coercive()) throw InvalidHamiltonian();
  if (p <= q) return range_max(H, p, q);
  return range_min(H, q, p);
}

PLFunction godunov_flux_profile(const PLFunction& H, const Rational& p) {
  if (!H.is_coercive()) throw InvalidHamiltonian();
  return glue(cummin_left(H, p), p, cummax_right(H, p));
}

ExtendedInterval lower_semiflux(const PLFunction& H, const Rational& q, const Rational& p) {
  if (!H.is_coercive()) throw InvalidHamiltonian();
  if (q < p) return ExtendedInterval(ExtendedRational::neg_inf(), ExtendedRational::neg_inf());
  if (q == p) return ExtendedInterval(ExtendedRational::neg_inf(), ExtendedRational(H.eval(p)));
  Rational m = range_max(H, p, q);
  return ExtendedInterval(m, m);
}

ExtendedInterval upper_semiflux(const PLFunction& H, const Rational& q, const Rational& p) {
  if (!H.is_coercive()) throw InvalidHamiltonian();
  if (q > p) return ExtendedInterval(ExtendedRational::pos_inf(), ExtendedRational::pos_inf());
  if (q == p) return ExtendedInterval(ExtendedRational(H.eval(p)), ExtendedRational::pos_inf());
  Rational m = range_min(H, q, p);
  return ExtendedInterval(m, m);
}

GodunovApplication apply_godunov_witnesses(const PLFunction& H, const PLFunction& F0, const Rational& p,
                                           bool envelope_fallback) {
  if (!H.is_coercive()) throw InvalidHamiltonian();
  PLFunction F = upgrade_if_needed(H, F0, envelope_fallback);
  GodunovApplication out{Rational(0), Rational(0), Rational(0)};
  out.value = monotone_intersection_value(F, godunov_flux_profile(H, p), &out.witness_lo, &out.witness_hi);
  return out;
}

Rational apply_godunov(const PLFunction& H, const PLFunction& F0, const Rational& p,
                       bool envelope_fallback) {
  return apply_godunov_witnesses(H, F0, p, envelope_fallback).value;
}

Rational apply_lower_semiflux(const PLFunction& H, const PLFunction& F0, const Rational& p,
                              bool envelope_fallback) {
  if (!H.is_coercive()) throw InvalidHamiltonian();
  PLFunction F = upgrade_if_needed(H, F0, envelope_fallback);
  // q = p is a witness whenever F(p) lands in [-inf, H(p)].
  if (F.eval(p) <= H.eval(p)) return F.eval(p);
  return monotone_intersection_value(F, cummax_right(H, p), nullptr, nullptr);
}

Rational apply_upper_semiflux(const PLFunction& H, const PLFunction& F0, const Rational& p,
                              bool envelope_fallback) {
  if (!H.is_coercive()) throw InvalidHamiltonian();
  PLFunction F = upgrade_if_needed(H, F0, envelope_fallback);
  if (F.eval(p) >= H.eval(p)) return F.eval(p);
  return monotone_intersection_value(F, cummin_left(H, p), nullptr, nullptr);
}

namespace {

std::vector<ExtendedInterval> intersect_components(const std::vector<ExtendedInterval>& a,
                                                   const std::vector<ExtendedInterval>& b) {
  std::vector<ExtendedInterval> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    ExtendedRational lo = a[i].lo > b[j].lo ? a[i].lo : b[j].lo;
    ExtendedRational hi = a[i].hi < b[j].hi ? a[i].hi : b[j].hi;
    if (lo <= hi) out.push_back(ExtendedInterval(lo, hi));
    if (a[i].hi < b[j].hi)
      ++i;
    else
      ++j;
  }
  return out;
}

}  // namespace

Germ germ(const PLFunction& H, const PLFunction& F0) {
  if (!H.is_coercive()) throw InvalidHamiltonian();
  if (!F0.is_nonincreasing()) throw InvalidBoundary();
  PLFunction R = relax(H, F0);
  auto comps = zero_set(subtract(H, R));

  // Second route: sub_relax <= H <= super_relax, intersected exactly.
  auto ge_sub = nonneg_set(subtract(H, sub_relax(H, F0)));
  auto le_sup = nonneg_set(subtract(super_relax(H, F0), H));
  auto comps2 = intersect_components(ge_sub, le_sup);
  if (!(comps == comps2))
    throw InternalMismatch("germ: interval decomposition and relaxation-inequality routes disagree");
  return Germ{std::move(comps)};
}

bool bln_check(const PLFunction& H, const Rational& h, const Rational& p) {
  if (!H.is_coercive()) throw InvalidHamiltonian();
  const Rational Hp = H.eval(p);
  std::vector<Rational> ks = {p, h};
  for (const auto& pt : H.breakpoints()) ks.push_back(pt.x);
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  auto sgn = [](const Rational& v) { return Rational(v.sign()); };
  auto holds_at = [&](const Rational& k) {
    Rational omega = (sgn(p - k) - sgn(h - k)) * (Hp - H.eval(k));
    return omega <= Rational(0);
  };
  for (const auto& k : ks)
    if (!holds_at(k)) return false;
  // On each open gap the sign factor is constant and H is affine, so the
  // product is extremal at the gap's endpoints.
  for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
    Rational mid = (ks[i] + ks[i + 1]) / Rational(2);
    Rational sigma = sgn(p - mid) - sgn(h - mid);
    if (sigma * (Hp - H.eval(ks[i])) > Rational(0)) return false;
    if (sigma * (Hp - H.eval(ks[i + 1])) > Rational(0)) return false;
  }
  // Outside the hull of {p, h} both sign factors agree and the product
  // vanishes identically.
  return true;
}

PLFunction neumann_relaxed(const PLFunction& H, const Rational& h) {
  if (!H.is_coercive()) throw InvalidHamiltonian();
  PLFunction N = glue(cummax_left(H, h), h, cummin_right(H, h));
#ifndef NDEBUG
  if (!N.is_nonincreasing()) throw InternalMismatch("relaxed Neumann flux must be non-increasing");
#endif
  return N;
}

PLFunction dirichlet_relaxed(const PLFunction& H, const Rational& A0) {
  if (!H.is_coercive()) throw InvalidHamiltonian();
  return pointwise_max(PLFunction::constant(A0), lower_envelope(H));
}

}  // namespace hjrelax
