#pragma once

#include <algorithm>
#include <vector>

#include "hjrelax/pl_function.hpp"

// Test-side oracles. They rely only on pointwise evaluation over grids that
// contain every breakpoint (so piecewise-affine extrema are attained at grid
// points, making the grid answers exact), never on the library's envelope,
// level-set, or flux machinery.
namespace hjrelax::oracle {

inline std::vector<Rational> dense_grid(const std::vector<const PLFunction*>& fs, long den = 8,
                                        long pad = 4) {
  std::vector<Rational> xs;
  Rational lo(0), hi(0);
  bool first = true;
  for (const auto* f : fs)
    for (const auto& pt : f->breakpoints()) {
      if (first || pt.x < lo) lo = pt.x;
      if (first || pt.x > hi) hi = pt.x;
      first = false;
      xs.push_back(pt.x);
    }
  long a = static_cast<long>(std::floor(lo.to_double())) - pad;
  long b = static_cast<long>(std::ceil(hi.to_double())) + pad;
  for (long k = a * den; k <= b * den; ++k) xs.push_back(Rational(k, den));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

/// sup over [p, +inf) of f, for slope_right <= 0 (the tail beyond the last
/// breakpoint is non-increasing, so the grid maximum is the true supremum).
inline Rational sup_right(const PLFunction& f, const Rational& p) {
  Rational m = f.eval(p);
  for (const auto& pt : f.breakpoints())
    if (pt.x >= p) m = max(m, pt.y);
  return m;
}

inline Rational inf_left(const PLFunction& f, const Rational& p) {
  Rational m = f.eval(p);
  for (const auto& pt : f.breakpoints())
    if (pt.x <= p) m = min(m, pt.y);
  return m;
}

/// Godunov flux by grid scan over [min(p,q), max(p,q)].
inline Rational flux(const PLFunction& H, const Rational& q, const Rational& p) {
  Rational a = min(p, q), b = max(p, q);
  bool use_max = (p <= q);
  Rational m = use_max ? max(H.eval(a), H.eval(b)) : min(H.eval(a), H.eval(b));
  for (const auto& pt : H.breakpoints())
    if (a < pt.x && pt.x < b) m = use_max ? max(m, pt.y) : min(m, pt.y);
  return m;
}

/// First return of H to level H(p) strictly right of p via grid scan plus a
/// local linear solve; ExtendedRational::pos_inf() when the excursion never
/// closes. Mirrors the definition, not the implementation.
inline ExtendedRational upper_point(const PLFunction& H, const Rational& p) {
  Rational level = H.eval(p);
  auto grid = dense_grid({&H});
  // Immediate right behavior: probe within the first affine piece right of p.
  Rational eps(1, 1 << 12);
  for (const auto& pt : H.breakpoints())
    if (pt.x > p) {
      eps = min(eps, (pt.x - p) / Rational(2));
      break;
    }
  if (H.eval(p + eps) <= level) return ExtendedRational(p);

  Rational prev = p;
  for (const auto& x : grid) {
    if (x <= p) continue;
    Rational v = H.eval(x);
    if (v <= level) {
      if (v == level) return ExtendedRational(x);
      Rational vp = H.eval(prev);
      // Affine between consecutive grid points (grid contains breakpoints).
      return ExtendedRational(prev + (level - vp) * (x - prev) / (v - vp));
    }
    prev = x;
  }
  return ExtendedRational::pos_inf();
}

inline Rational lower_point(const PLFunction& H, const Rational& p) {
  Rational level = H.eval(p);
  auto grid = dense_grid({&H});
  Rational eps(1, 1 << 12);
  for (auto it = H.breakpoints().rbegin(); it != H.breakpoints().rend(); ++it)
    if (it->x < p) {
      eps = min(eps, (p - it->x) / Rational(2));
      break;
    }
  if (H.eval(p - eps) >= level) return p;

  Rational prev = p;
  for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
    const Rational& x = *it;
    if (x >= p) continue;
    Rational v = H.eval(x);
    if (v >= level) {
      if (v == level) return x;
      Rational vp = H.eval(prev);
      return prev + (level - vp) * (x - prev) / (v - vp);
    }
    prev = x;
  }
  // Still below the level at the left edge of the grid: solve on the tail,
  // where H is affine with the (negative) left slope.
  Rational x_left = min(grid.front(), p);
  Rational v = H.eval(x_left);
  return x_left + (level - v) / H.slope_left();
}

}  // namespace hjrelax::oracle
