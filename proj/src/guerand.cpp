#include "hjrelax/guerand.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hjrelax/relaxation.hpp"

namespace hjrelax {

namespace {

// Caches level sets and excursion endpoints of a fixed Hamiltonian; the
// limiter-point search evaluates these at many repeated abscissas.
class ExcursionAnalyzer {
 public:
  explicit ExcursionAnalyzer(const PLFunction& H) : H_(H) {}

  const std::vector<ExtendedInterval>& level_set(const Rational& level) {
    auto it = levels_.find(level);
    if (it == levels_.end())
      it = levels_.emplace(level, zero_set(subtract(H_, PLFunction::constant(level)))).first;
    return it->second;
  }

  ExtendedRational upper(const Rational& p) {
    auto it = uppers_.find(p);
    if (it != uppers_.end()) return it->second;
    ExtendedRational result(p);
    if (H_.slope_right_at(p) > Rational(0)) {
      result = ExtendedRational::pos_inf();
      for (const auto& comp : level_set(H_.eval(p)))
        if (comp.lo > ExtendedRational(p)) {
          result = comp.lo;
          break;
        }
    }
    uppers_.emplace(p, result);
    return result;
  }

  Rational lower(const Rational& p) {
    auto it = lowers_.find(p);
    if (it != lowers_.end()) return it->second;
    Rational result = p;
    if (H_.slope_left_at(p) > Rational(0)) {
      bool found = false;
      const auto& comps = level_set(H_.eval(p));
      for (auto rit = comps.rbegin(); rit != comps.rend(); ++rit)
        if (rit->hi < ExtendedRational(p)) {
          // Finite by coercivity: H returns to every level on the left.
          result = rit->hi.finite();
          found = true;
          break;
        }
      if (!found) throw InternalMismatch("lower excursion endpoint not found for a coercive Hamiltonian");
    }
    lowers_.emplace(p, result);
    return result;
  }

 private:
  const PLFunction& H_;
  std::map<Rational, std::vector<ExtendedInterval>> levels_;
  std::map<Rational, ExtendedRational> uppers_;
  std::map<Rational, Rational> lowers_;
};

void append_finite_endpoints(const std::vector<ExtendedInterval>& comps, std::vector<Rational>& out) {
  for (const auto& c : comps) {
    if (c.lo.is_finite()) out.push_back(c.lo.finite());
    if (c.hi.is_finite()) out.push_back(c.hi.finite());
  }
}

void sort_unique(std::vector<Rational>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

}  // namespace

ExtendedRational upper_point(const PLFunction& H, const Rational& p) {
  if (!H.is_coercive()) throw InvalidHamiltonian();
  return ExcursionAnalyzer(H).upper(p);
}

Rational lower_point(const PLFunction& H, const Rational& p) {
  if (!H.is_coercive()) throw InvalidHamiltonian();
  return ExcursionAnalyzer(H).lower(p);
}

UpperLowerPair upper_lower_pair(const PLFunction& H, const Rational& p) {
  if (!H.is_coercive()) throw InvalidHamiltonian();
  ExcursionAnalyzer an(H);
  return {p, an.lower(p), an.upper(p)};
}

std::vector<CharPoint> characteristic_points(const PLFunction& H, const PLFunction& F) {
  if (!H.is_coercive()) throw InvalidHamiltonian();
  if (!F.is_nonincreasing()) throw InvalidBoundary();
  // Candidates: endpoints of the components of {H = F}. Interior points of a
  // shared component see non-positive slopes of H on both sides (F is
  // non-increasing there), so no strict excursion can start at them.
  std::vector<Rational> candidates;
  append_finite_endpoints(zero_set(subtract(H, F)), candidates);
  sort_unique(candidates);

  std::vector<CharPoint> out;
  for (const auto& p : candidates) {
    if (H.slope_right_at(p) > Rational(0)) out.push_back({p, PointSign::Positive});
    if (H.slope_left_at(p) > Rational(0)) out.push_back({p, PointSign::Negative});
  }
  return out;
}

namespace {

struct LimiterSearch {
  const PLFunction& H;
  const PLFunction& F;  // semi-coercive
  ExcursionAnalyzer an;

  LimiterSearch(const PLFunction& h, const PLFunction& f) : H(h), F(f), an(h) {}

  // Candidate abscissas: breakpoints of H and F, crossings of H and F, and
  // every point sharing a level with one of those (limiter plateaus sit at
  // those levels; the coincidence cross-check enforces completeness).
  std::vector<Rational> candidates() {
    std::vector<Rational> base;
    for (const auto& pt : H.breakpoints()) base.push_back(pt.x);
    for (const auto& pt : F.breakpoints()) base.push_back(pt.x);
    append_finite_endpoints(zero_set(subtract(H, F)), base);
    sort_unique(base);
    std::vector<Rational> full = base;
    for (const auto& x : base) append_finite_endpoints(an.level_set(H.eval(x)), full);
    sort_unique(full);
    return full;
  }

  // Witness abscissas for the universal quantifier: candidate points plus the
  // endpoints of {H >= F}, refined with midpoints so every maximal interval on
  // which the quantified predicate is constant contains a sample.
  std::vector<Rational> witnesses(const std::vector<Rational>& cands) {
    std::vector<Rational> w = cands;
    append_finite_endpoints(nonneg_set(subtract(H, F)), w);
    sort_unique(w);
    std::vector<Rational> full = w;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      full.push_back((w[i] + w[i + 1]) / Rational(2));
    sort_unique(full);
    return full;
  }

  bool positive_ok(const Rational& p, const ExtendedRational& p_plus, const std::vector<Rational>& wit) {
    const Rational Hp = H.eval(p);
    for (const auto& q : wit) {
      Rational Hq = H.eval(q);
      if (!(Hp > Hq && Hq >= F.eval(q))) continue;
      if (open_intervals_overlap(ExtendedRational(an.lower(q)), an.upper(q), ExtendedRational(p), p_plus))
        return false;
    }
    return true;
  }

  bool negative_ok(const Rational& p, const Rational& p_minus, const std::vector<Rational>& wit) {
    const Rational Hp = H.eval(p);
    for (const auto& q : wit) {
      Rational Hq = H.eval(q);
      if (!(F.eval(q) >= Hq && Hq > Hp)) continue;
      if (open_intervals_overlap(ExtendedRational(an.lower(q)), an.upper(q), ExtendedRational(p_minus),
                                 ExtendedRational(p)))
        return false;
    }
    return true;
  }
};

}  // namespace

std::vector<LimiterPoint> limiter_points_unchecked(const PLFunction& H, const PLFunction& F0,
                                                   bool envelope_fallback) {
  if (!H.is_coercive()) throw InvalidHamiltonian();
  if (!F0.is_nonincreasing()) throw InvalidBoundary();
  PLFunction F = F0;
  if (!F0.is_semicoercive()) {
    if (!envelope_fallback) throw NotSemiCoercive();
    F = pointwise_max(F0, lower_envelope(H));
  }

  LimiterSearch search(H, F);
  auto cands = search.candidates();
  auto wit = search.witnesses(cands);

  std::vector<LimiterPoint> out;
  for (const auto& p : cands) {
    Rational p_minus = search.an.lower(p);
    ExtendedRational p_plus = search.an.upper(p);
    Rational Hp = H.eval(p), Fp = F.eval(p);
    if (ExtendedRational(p) < p_plus && Hp >= Fp && search.positive_ok(p, p_plus, wit))
      out.push_back({p, PointSign::Positive, ExtendedInterval(p_minus, p_plus)});
    if (p_minus < p && Hp <= Fp && search.negative_ok(p, p_minus, wit))
      out.push_back({p, PointSign::Negative, ExtendedInterval(p_minus, p_plus)});
  }
  return out;
}

std::vector<LimiterPoint> limiter_points(const PLFunction& H, const PLFunction& F0, bool envelope_fallback) {
  auto lims = limiter_points_unchecked(H, F0, envelope_fallback);

  // Coincidence cross-check: limiter points of F0 must be exactly the
  // characteristic points of the relaxed condition.
  PLFunction F = F0.is_semicoercive() ? F0 : pointwise_max(F0, lower_envelope(H));
  auto chars = characteristic_points(H, relax(H, F));
  auto mismatch = [&]() {
    std::ostringstream os;
    os << "limiter points do not match characteristic points of the relaxed condition; H=" << H.str()
       << " F0=" << F0.str();
    return InternalMismatch(os.str());
  };
  if (chars.size() != lims.size()) throw mismatch();
  std::vector<std::pair<Rational, int>> a, b;
  for (const auto& c : chars) a.emplace_back(c.location, c.sign == PointSign::Positive ? 1 : 0);
  for (const auto& l : lims) b.emplace_back(l.p, l.sign == PointSign::Positive ? 1 : 0);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw mismatch();
  return lims;
}

PLFunction apply_limiter_plateaus(const PLFunction& H, const std::vector<ExtendedInterval>& intervals) {
  if (intervals.empty()) return H;
  std::vector<ExtendedInterval> sorted(intervals);
  std::sort(sorted.begin(), sorted.end(),
            [](const ExtendedInterval& x, const ExtendedInterval& y) { return x.lo < y.lo; });
  std::vector<ExtendedInterval> merged;
  for (const auto& iv : sorted) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      if (iv.hi > merged.back().hi) merged.back().hi = iv.hi;
    } else {
      merged.push_back(iv);
    }
  }

  std::vector<PLFunction::Point> pts;
  auto inside = [&merged](const Rational& x) {
    for (const auto& iv : merged)
      if (iv.contains(ExtendedRational(x))) return true;
    return false;
  };
  for (const auto& iv : merged) {
    if (!iv.lo.is_finite())
      throw InvalidInputs("limiter plateau cannot extend to -infinity");
    Rational a = iv.lo.finite();
    Rational v = H.eval(a);
    pts.push_back({a, v});
    if (iv.hi.is_finite()) {
      Rational b = iv.hi.finite();
      if (H.eval(b) != v) throw InternalMismatch("plateau endpoints of the limiter operator disagree");
      if (b != a) pts.push_back({b, v});
    }
  }
  for (const auto& pt : H.breakpoints())
    if (!inside(pt.x)) pts.push_back(pt);
  std::sort(pts.begin(), pts.end(),
            [](const PLFunction::Point& x, const PLFunction::Point& y) { return x.x < y.x; });
  Rational sr = merged.back().hi.is_pos_inf() ? Rational(0) : H.slope_right();
  return PLFunction(std::move(pts), H.slope_left(), std::move(sr));
}

PLFunction guerand_operator(const PLFunction& H, const PLFunction& F0, bool envelope_fallback) {
  auto lims = limiter_points(H, F0, envelope_fallback);
  std::vector<ExtendedInterval> intervals;
  intervals.reserve(lims.size());
  for (const auto& l : lims) intervals.push_back(l.interval);
  return apply_limiter_plateaus(H, intervals);
}

}  // namespace hjrelax
