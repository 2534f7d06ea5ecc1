#include "hjrelax/pl_function.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>

namespace hjrelax {

std::string ExtendedInterval::str() const {
  return "[" + lo.str() + ", " + hi.str() + "]";
}

bool open_intervals_overlap(const ExtendedRational& a_lo, const ExtendedRational& a_hi,
                            const ExtendedRational& b_lo, const ExtendedRational& b_hi) {
  if (!(a_lo < a_hi) || !(b_lo < b_hi)) return false;  // an empty open interval
  return a_lo < b_hi && b_lo < a_hi;
}

PLFunction::PLFunction(std::vector<Point> breakpoints, Rational slope_left, Rational slope_right)
    : pts_(std::move(breakpoints)), sl_(std::move(slope_left)), sr_(std::move(slope_right)) {
  if (pts_.empty()) throw InvalidInputs("piecewise-linear function needs at least one breakpoint");
  for (std::size_t i = 1; i < pts_.size(); ++i)
    if (!(pts_[i - 1].x < pts_[i].x))
      throw InvalidInputs("breakpoint abscissas must be strictly increasing");
  canonicalize();
}

PLFunction PLFunction::constant(const Rational& c) {
  return PLFunction({{Rational(0), c}}, Rational(0), Rational(0));
}

PLFunction PLFunction::affine(const Rational& slope, const Rational& intercept) {
  return PLFunction({{Rational(0), intercept}}, slope, slope);
}

PLFunction PLFunction::abs_value(const Rational& center, const Rational& offset) {
  return PLFunction({{center, offset}}, Rational(-1), Rational(1));
}

void PLFunction::canonicalize() {
  if (pts_.size() == 1) {
    if (sl_ == sr_ && !(pts_[0].x == Rational(0))) {
      Rational y0 = pts_[0].y + sl_ * (Rational(0) - pts_[0].x);
      pts_[0] = {Rational(0), y0};
    }
    return;
  }
  const std::size_t n = pts_.size();
  std::vector<Rational> s(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    s[i] = (pts_[i + 1].y - pts_[i].y) / (pts_[i + 1].x - pts_[i].x);

  std::vector<Point> kept;
  kept.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool keep;
    if (i == 0)
      keep = (sl_ != s[0]);
    else if (i == n - 1)
      keep = (s[n - 2] != sr_);
    else
      keep = (s[i - 1] != s[i]);
    if (keep) kept.push_back(pts_[i]);
  }
  if (kept.empty()) {
    // Globally affine; anchor at x = 0.
    Rational y0 = pts_[0].y + sl_ * (Rational(0) - pts_[0].x);
    pts_ = {{Rational(0), y0}};
    return;
  }
  pts_ = std::move(kept);
}

Rational PLFunction::eval(const Rational& p) const {
  if (p <= pts_.front().x) return pts_.front().y + sl_ * (p - pts_.front().x);
  if (p >= pts_.back().x) return pts_.back().y + sr_ * (p - pts_.back().x);
  // Largest i with pts_[i].x <= p.
  std::size_t lo = 0, hi = pts_.size() - 1;
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (pts_[mid].x <= p)
      lo = mid;
    else
      hi = mid;
  }
  Rational s = segment_slope(lo);
  return pts_[lo].y + s * (p - pts_[lo].x);
}

double PLFunction::eval_double(double p) const {
  return eval(Rational::from_double(p)).to_double();
}

Rational PLFunction::segment_slope(std::size_t i) const {
  return (pts_[i + 1].y - pts_[i].y) / (pts_[i + 1].x - pts_[i].x);
}

Rational PLFunction::slope_right_at(const Rational& p) const {
  if (p < pts_.front().x) return sl_;
  if (p >= pts_.back().x) return sr_;
  std::size_t i = 0;
  while (i + 1 < pts_.size() && pts_[i + 1].x <= p) ++i;
  return segment_slope(i);
}

Rational PLFunction::slope_left_at(const Rational& p) const {
  if (p <= pts_.front().x) return sl_;
  if (p > pts_.back().x) return sr_;
  std::size_t i = 0;
  while (i + 1 < pts_.size() && pts_[i + 1].x < p) ++i;
  return segment_slope(i);
}

PLFunction PLFunction::negate() const {
  std::vector<Point> q(pts_);
  for (auto& pt : q) pt.y = -pt.y;
  return PLFunction(std::move(q), -sl_, -sr_);
}

PLFunction PLFunction::reflect() const {
  std::vector<Point> q;
  q.reserve(pts_.size());
  for (auto it = pts_.rbegin(); it != pts_.rend(); ++it) q.push_back({-it->x, it->y});
  return PLFunction(std::move(q), -sr_, -sl_);
}

PLFunction PLFunction::add_scalar(const Rational& c) const {
  std::vector<Point> q(pts_);
  for (auto& pt : q) pt.y = pt.y + c;
  return PLFunction(std::move(q), sl_, sr_);
}

bool PLFunction::is_nonincreasing() const {
  if (sl_ > Rational(0) || sr_ > Rational(0)) return false;
  for (std::size_t i = 0; i + 1 < pts_.size(); ++i)
    if (segment_slope(i) > Rational(0)) return false;
  return true;
}

bool PLFunction::is_nonnegative() const {
  if (sl_ > Rational(0) || sr_ < Rational(0)) return false;
  for (const auto& pt : pts_)
    if (pt.y < Rational(0)) return false;
  return true;
}

bool PLFunction::is_constant_on(const ExtendedRational& a, const ExtendedRational& b) const {
  if (!(a < b)) return true;
  const Rational zero(0);
  // Left tail (-inf, x_front).
  if (a < ExtendedRational(pts_.front().x) && sl_ != zero) return false;
  // Inter-breakpoint segments.
  for (std::size_t i = 0; i + 1 < pts_.size(); ++i) {
    if (open_intervals_overlap(a, b, ExtendedRational(pts_[i].x), ExtendedRational(pts_[i + 1].x)) &&
        segment_slope(i) != zero)
      return false;
  }
  // Right tail (x_back, +inf).
  if (b > ExtendedRational(pts_.back().x) && sr_ != zero) return false;
  return true;
}

std::string PLFunction::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PLFunction& f) {
  os << "PL{sl=" << f.sl_ << ";";
  for (const auto& pt : f.pts_) os << " (" << pt.x << "," << pt.y << ")";
  os << "; sr=" << f.sr_ << "}";
  return os;
}

namespace {

std::vector<Rational> merged_abscissas(const PLFunction& f, const PLFunction& g) {
  std::vector<Rational> xs;
  xs.reserve(f.breakpoints().size() + g.breakpoints().size());
  for (const auto& pt : f.breakpoints()) xs.push_back(pt.x);
  for (const auto& pt : g.breakpoints()) xs.push_back(pt.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

void push_point(std::vector<PLFunction::Point>& pts, const Rational& x, const Rational& y) {
  if (!pts.empty() && pts.back().x == x) {
    if (pts.back().y != y) throw InternalMismatch("conflicting values while assembling a PL function");
    return;
  }
  pts.push_back({x, y});
}

}  // namespace

PLFunction add(const PLFunction& f, const PLFunction& g) {
  auto xs = merged_abscissas(f, g);
  std::vector<PLFunction::Point> pts;
  pts.reserve(xs.size());
  for (const auto& x : xs) pts.push_back({x, f.eval(x) + g.eval(x)});
  return PLFunction(std::move(pts), f.slope_left() + g.slope_left(), f.slope_right() + g.slope_right());
}

PLFunction subtract(const PLFunction& f, const PLFunction& g) {
  return add(f, g.negate());
}

PLFunction pointwise_min(const PLFunction& f, const PLFunction& g) {
  PLFunction d = subtract(f, g);
  std::vector<Rational> xs = merged_abscissas(f, g);
  for (const auto& comp : zero_set(d)) {
    if (comp.lo.is_finite()) xs.push_back(comp.lo.finite());
    if (comp.hi.is_finite()) xs.push_back(comp.hi.finite());
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<PLFunction::Point> pts;
  pts.reserve(xs.size());
  for (const auto& x : xs) pts.push_back({x, min(f.eval(x), g.eval(x))});
  // Far left the steeper-upward (larger) slope lies below; far right the flatter.
  Rational sl = max(f.slope_left(), g.slope_left());
  Rational sr = min(f.slope_right(), g.slope_right());
  return PLFunction(std::move(pts), std::move(sl), std::move(sr));
}

PLFunction pointwise_max(const PLFunction& f, const PLFunction& g) {
  return pointwise_min(f.negate(), g.negate()).negate();
}

PLFunction running_sup_right(const PLFunction& f) {
  if (f.slope_right() > Rational(0)) throw UnboundedAbove();
  const auto& pts = f.breakpoints();
  const std::size_t n = pts.size();

  // Walk right to left, keeping M = sup of f over [x_{i+1}, +inf).
  std::vector<PLFunction::Point> rev;  // decreasing x
  rev.push_back({pts.back().x, pts.back().y});
  Rational M = pts.back().y;
  Rational out_sr = f.slope_right();
  auto push_rev = [&rev](const Rational& x, const Rational& y) {
    if (!rev.empty() && rev.back().x == x) {
      if (rev.back().y != y) throw InternalMismatch("running_sup_right assembly");
      return;
    }
    rev.push_back({x, y});
  };
  for (std::size_t k = n - 1; k-- > 0;) {
    const Rational s = f.segment_slope(k);
    const Rational& yi = pts[k].y;
    if (s <= Rational(0) && yi > M) {
      // Result follows f down to level M, then stays on the plateau.
      Rational x_star = pts[k].x + (M - yi) / s;
      push_rev(x_star, M);
      push_rev(pts[k].x, yi);
      M = yi;
    }
    // Otherwise the segment lies at or below M and the result is the plateau.
  }
  Rational out_sl;
  const Rational& y0 = pts.front().y;
  if (f.slope_left() < Rational(0)) {
    if (y0 < M) {
      Rational x_star = pts.front().x + (M - y0) / f.slope_left();
      push_rev(x_star, M);
    }
    out_sl = f.slope_left();
  } else {
    out_sl = Rational(0);
  }
  std::reverse(rev.begin(), rev.end());
  return PLFunction(std::move(rev), std::move(out_sl), std::move(out_sr));
}

PLFunction running_inf_left(const PLFunction& f) {
  if (f.slope_left() > Rational(0)) throw UnboundedBelow();
  // inf_{q<=p} f(q) = -sup_{q>=-p} (-f)(-q), pushed through reflect/negate.
  return running_sup_right(f.negate().reflect()).reflect().negate();
}

PLFunction cummax_right(const PLFunction& f, const Rational& a) {
  const auto& pts = f.breakpoints();
  Rational M = f.eval(a);
  std::vector<PLFunction::Point> out;
  out.push_back({a, M});

  auto process = [&](const Rational& lo, const Rational& hi, const Rational& ylo, const Rational& yhi) {
    if (yhi > M) {
      // ylo <= M always (M covers [a, lo]).
      Rational x_rise = lo;
      if (ylo < M) {
        Rational s = (yhi - ylo) / (hi - lo);
        x_rise = lo + (M - ylo) / s;
      }
      push_point(out, x_rise, M);
      push_point(out, hi, yhi);
      M = yhi;
    }
  };

  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i + 1].x <= a) continue;
    Rational lo = max(pts[i].x, a);
    process(lo, pts[i + 1].x, f.eval(lo), pts[i + 1].y);
  }
  Rational out_sr(0);
  if (f.slope_right() > Rational(0)) {
    Rational t0 = max(pts.back().x, a);
    Rational y_t0 = f.eval(t0);
    if (y_t0 < M)
      push_point(out, t0 + (M - y_t0) / f.slope_right(), M);
    else
      push_point(out, t0, y_t0);
    out_sr = f.slope_right();
  }
  return PLFunction(std::move(out), Rational(0), std::move(out_sr));
}

PLFunction cummin_right(const PLFunction& f, const Rational& a) {
  return cummax_right(f.negate(), a).negate();
}

PLFunction cummax_left(const PLFunction& f, const Rational& a) {
  return cummax_right(f.reflect(), -a).reflect();
}

PLFunction cummin_left(const PLFunction& f, const Rational& a) {
  return cummax_left(f.negate(), a).negate();
}

PLFunction glue(const PLFunction& left, const Rational& x0, const PLFunction& right) {
  Rational v = left.eval(x0);
  if (v != right.eval(x0)) throw InternalMismatch("glue: mismatched values at the junction");
  std::vector<PLFunction::Point> pts;
  bool left_has = false, right_has = false;
  for (const auto& pt : left.breakpoints())
    if (pt.x < x0) {
      pts.push_back(pt);
      left_has = true;
    }
  pts.push_back({x0, v});
  for (const auto& pt : right.breakpoints())
    if (pt.x > x0) {
      pts.push_back(pt);
      right_has = true;
    }
  Rational sl = left_has ? left.slope_left() : left.slope_left_at(x0);
  Rational sr = right_has ? right.slope_right() : right.slope_right_at(x0);
  return PLFunction(std::move(pts), std::move(sl), std::move(sr));
}

Rational range_max(const PLFunction& f, const Rational& a, const Rational& b) {
  if (a > b) throw InvalidInputs("range_max with a > b");
  Rational m = max(f.eval(a), f.eval(b));
  for (const auto& pt : f.breakpoints())
    if (a < pt.x && pt.x < b) m = max(m, pt.y);
  return m;
}

Rational range_min(const PLFunction& f, const Rational& a, const Rational& b) {
  if (a > b) throw InvalidInputs("range_min with a > b");
  Rational m = min(f.eval(a), f.eval(b));
  for (const auto& pt : f.breakpoints())
    if (a < pt.x && pt.x < b) m = min(m, pt.y);
  return m;
}

std::vector<SignRegion> sign_partition(const PLFunction& f) {
  const auto& pts = f.breakpoints();
  std::vector<Rational> xs;
  for (const auto& pt : pts) xs.push_back(pt.x);
  const Rational zero(0);
  if (f.slope_left() != zero) {
    Rational r = pts.front().x - pts.front().y / f.slope_left();
    if (r < pts.front().x) xs.push_back(r);
  }
  if (f.slope_right() != zero) {
    Rational r = pts.back().x - pts.back().y / f.slope_right();
    if (r > pts.back().x) xs.push_back(r);
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i].y.sign() * pts[i + 1].y.sign() < 0) {
      Rational s = f.segment_slope(i);
      xs.push_back(pts[i].x - pts[i].y / s);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  // Alternating raw regions: tail, point, gap, point, ..., tail.
  std::vector<SignRegion> raw;
  raw.push_back({ExtendedRational::neg_inf(), ExtendedRational(xs.front()),
                 f.eval(xs.front() - Rational(1)).sign()});
  for (std::size_t i = 0; i < xs.size(); ++i) {
    raw.push_back({ExtendedRational(xs[i]), ExtendedRational(xs[i]), f.eval(xs[i]).sign()});
    if (i + 1 < xs.size()) {
      Rational mid = (xs[i] + xs[i + 1]) / Rational(2);
      raw.push_back({ExtendedRational(xs[i]), ExtendedRational(xs[i + 1]), f.eval(mid).sign()});
    }
  }
  raw.push_back({ExtendedRational(xs.back()), ExtendedRational::pos_inf(),
                 f.eval(xs.back() + Rational(1)).sign()});

  std::vector<SignRegion> merged;
  for (const auto& r : raw) {
    if (!merged.empty() && merged.back().sign == r.sign)
      merged.back().hi = r.hi;
    else
      merged.push_back(r);
  }
  return merged;
}

std::vector<ExtendedInterval> zero_set(const PLFunction& f) {
  std::vector<ExtendedInterval> out;
  for (const auto& r : sign_partition(f))
    if (r.sign == 0) out.push_back(ExtendedInterval(r.lo, r.hi));
  return out;
}

std::vector<ExtendedInterval> nonneg_set(const PLFunction& f) {
  std::vector<ExtendedInterval> out;
  bool open = false;
  for (const auto& r : sign_partition(f)) {
    if (r.sign >= 0) {
      if (open)
        out.back().hi = r.hi;
      else
        out.push_back(ExtendedInterval(r.lo, r.hi));
      open = true;
    } else {
      open = false;
    }
  }
  return out;
}

bool pointwise_leq(const PLFunction& f, const PLFunction& g) {
  return subtract(g, f).is_nonnegative();
}

}  // namespace hjrelax
