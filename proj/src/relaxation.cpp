#include "hjrelax/relaxation.hpp"

#include <algorithm>

namespace hjrelax {

namespace {

void check_pair(const PLFunction& H, const PLFunction& F0) {
  if (!H.is_coercive()) throw InvalidHamiltonian();
  if (!F0.is_nonincreasing()) throw InvalidBoundary();
}

}  // namespace

PLFunction sub_relax(const PLFunction& H, const PLFunction& F0) {
  check_pair(H, F0);
  // min(F0, H) inherits F0's non-positive right tail slope, so the running
  // supremum from the right is finite.
  return running_sup_right(pointwise_min(F0, H));
}

PLFunction super_relax(const PLFunction& H, const PLFunction& F0) {
  check_pair(H, F0);
  return running_inf_left(pointwise_max(F0, H));
}

PLFunction piecewise_select(const PLFunction& selector, const PLFunction& f_pos, const PLFunction& f_neg) {
  std::vector<Rational> xs;
  for (const auto& pt : f_pos.breakpoints()) xs.push_back(pt.x);
  for (const auto& pt : f_neg.breakpoints()) xs.push_back(pt.x);
  auto regions = sign_partition(selector);
  for (const auto& r : regions) {
    if (r.lo.is_finite()) xs.push_back(r.lo.finite());
    if (r.hi.is_finite()) xs.push_back(r.hi.finite());
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  auto pick = [&](const Rational& x) -> Rational {
    int s = selector.eval(x).sign();
    if (s > 0) return f_pos.eval(x);
    if (s < 0) return f_neg.eval(x);
    Rational vp = f_pos.eval(x), vn = f_neg.eval(x);
    if (vp != vn) throw InternalMismatch("piecewise_select: branches disagree on the zero set");
    return vp;
  };

  std::vector<PLFunction::Point> pts;
  pts.reserve(xs.size());
  for (const auto& x : xs) pts.push_back({x, pick(x)});
  int sign_far_left = regions.front().sign;
  int sign_far_right = regions.back().sign;
  Rational sl = sign_far_left >= 0 ? f_pos.slope_left() : f_neg.slope_left();
  Rational sr = sign_far_right >= 0 ? f_pos.slope_right() : f_neg.slope_right();
  return PLFunction(std::move(pts), std::move(sl), std::move(sr));
}

PLFunction relax(const PLFunction& H, const PLFunction& F0) {
  check_pair(H, F0);
  PLFunction sub = sub_relax(H, F0);
  PLFunction sup = super_relax(H, F0);
  PLFunction result = piecewise_select(subtract(F0, H), sub, sup);
#ifndef NDEBUG
  // These equalities are theorems; any disagreement is an implementation bug.
  if (super_relax(H, sub) != result || sub_relax(H, sup) != result)
    throw InternalMismatch("relax: the three computation routes disagree");
#endif
  return result;
}

PLFunction lower_envelope(const PLFunction& H) {
  if (!H.is_coercive()) throw InvalidHamiltonian();
  return running_inf_left(H);
}

}  // namespace hjrelax
