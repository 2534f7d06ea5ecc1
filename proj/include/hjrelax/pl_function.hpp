#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hjrelax/rational.hpp"

namespace hjrelax {

/// Closed interval [lo, hi] with possibly infinite endpoints.
struct ExtendedInterval {
  ExtendedRational lo;
  ExtendedRational hi;

  ExtendedInterval(ExtendedRational l, ExtendedRational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw InvalidInputs("interval with hi < lo");
  }
  static ExtendedInterval point(const Rational& p) { return ExtendedInterval(p, p); }

  bool is_point() const { return lo == hi; }
  bool contains(const ExtendedRational& p) const { return lo <= p && p <= hi; }

  friend bool operator==(const ExtendedInterval& a, const ExtendedInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
  std::string str() const;
};

/// True when the open intervals (a_lo, a_hi) and (b_lo, b_hi) meet.
bool open_intervals_overlap(const ExtendedRational& a_lo, const ExtendedRational& a_hi,
                            const ExtendedRational& b_lo, const ExtendedRational& b_hi);

/// Continuous piecewise-linear function on the whole real line, exact
/// rational breakpoints and two tail slopes. Values are kept in canonical
/// form (no collinear breakpoint survives construction), so structural
/// equality is function equality.
class PLFunction {
 public:
  struct Point {
    Rational x;
    Rational y;
    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  };

  PLFunction(std::vector<Point> breakpoints, Rational slope_left, Rational slope_right);

  static PLFunction constant(const Rational& c);
  /// slope * x + intercept
  static PLFunction affine(const Rational& slope, const Rational& intercept);
  /// |x - center| + offset
  static PLFunction abs_value(const Rational& center = Rational(0), const Rational& offset = Rational(0));

  const std::vector<Point>& breakpoints() const { return pts_; }
  const Rational& slope_left() const { return sl_; }
  const Rational& slope_right() const { return sr_; }

  Rational eval(const Rational& p) const;
  double eval_double(double p) const;

  /// Slope on the segment immediately left / right of p.
  Rational slope_left_at(const Rational& p) const;
  Rational slope_right_at(const Rational& p) const;

  /// Slope of the i-th inter-breakpoint segment (i in [0, n-2]).
  Rational segment_slope(std::size_t i) const;

  PLFunction negate() const;
  PLFunction reflect() const;  // x -> f(-x)
  PLFunction add_scalar(const Rational& c) const;

  bool is_coercive() const { return sl_ < Rational(0) && sr_ > Rational(0); }
  bool is_nonincreasing() const;
  bool is_semicoercive() const { return is_nonincreasing() && sl_ < Rational(0); }
  /// min over all of R is >= 0 (requires downward tails to be absent).
  bool is_nonnegative() const;
  /// f restricted to the open interval (a, b) is a single constant.
  bool is_constant_on(const ExtendedRational& a, const ExtendedRational& b) const;

  friend bool operator==(const PLFunction& a, const PLFunction& b) {
    return a.pts_ == b.pts_ && a.sl_ == b.sl_ && a.sr_ == b.sr_;
  }
  friend bool operator!=(const PLFunction& a, const PLFunction& b) { return !(a == b); }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const PLFunction& f);

 private:
  void canonicalize();

  std::vector<Point> pts_;
  Rational sl_;
  Rational sr_;
};

PLFunction add(const PLFunction& f, const PLFunction& g);
PLFunction subtract(const PLFunction& f, const PLFunction& g);

/// Exact pointwise min/max; breakpoints are the union of the inputs' plus
/// every crossing, including crossings on the unbounded tails.
PLFunction pointwise_min(const PLFunction& f, const PLFunction& g);
PLFunction pointwise_max(const PLFunction& f, const PLFunction& g);

/// p -> sup over [p, +inf) of f. Throws UnboundedAbove when slope_right > 0.
PLFunction running_sup_right(const PLFunction& f);
/// p -> inf over (-inf, p] of f. Throws UnboundedBelow when slope_left > 0.
PLFunction running_inf_left(const PLFunction& f);

/// q -> max over [a, max(a,q)] of f; constant f(a) left of a.
PLFunction cummax_right(const PLFunction& f, const Rational& a);
/// q -> min over [min(a,q), a] of f; constant f(a) right of a.
PLFunction cummin_left(const PLFunction& f, const Rational& a);
/// q -> max over [min(a,q), a] of f; constant f(a) right of a.
PLFunction cummax_left(const PLFunction& f, const Rational& a);
/// q -> min over [a, max(a,q)] of f; constant f(a) left of a.
PLFunction cummin_right(const PLFunction& f, const Rational& a);

/// Stitch two functions at x0 (values must agree there).
PLFunction glue(const PLFunction& left, const Rational& x0, const PLFunction& right);

Rational range_max(const PLFunction& f, const Rational& a, const Rational& b);
Rational range_min(const PLFunction& f, const Rational& a, const Rational& b);

/// Maximal intervals of constant sign, in order, covering R.
struct SignRegion {
  ExtendedRational lo;
  ExtendedRational hi;
  int sign;  // -1, 0, +1
};
std::vector<SignRegion> sign_partition(const PLFunction& f);

/// Components of {f = 0}, as closed (possibly unbounded / degenerate) intervals.
std::vector<ExtendedInterval> zero_set(const PLFunction& f);
/// Components of {f >= 0}.
std::vector<ExtendedInterval> nonneg_set(const PLFunction& f);

/// f <= g everywhere.
bool pointwise_leq(const PLFunction& f, const PLFunction& g);

}  // namespace hjrelax
