#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "hjrelax/corpus.hpp"
#include "hjrelax/guerand.hpp"
#include "hjrelax/relaxation.hpp"
#include "oracles.hpp"

using namespace hjrelax;
using namespace hjrelax::fixtures;

TEST_CASE("upper and lower points: frozen examples") {
  CHECK(upper_point(abs_h(), r(1)) == ExtendedRational::pos_inf());
  CHECK(lower_point(abs_h(), r(1)) == r(-1));
  CHECK(lower_point(abs_h(), r(0)) == r(0));  // H >= H(0) on the left of 0
  CHECK(upper_point(abs_h(), r(0)) == ExtendedRational::pos_inf());
  CHECK(upper_point(w_shape(), r(-1, 2)) == ExtendedRational(r(1, 2)));
  CHECK(lower_point(w_shape(), r(-1, 2)) == r(-5, 4));
  // Top of the middle peak: excursion closes immediately on the right.
  CHECK(upper_point(w_shape(), r(0)) == ExtendedRational(r(0)));
  CHECK(lower_point(w_shape(), r(0)) == r(-3, 2));
  CHECK_THROWS_AS(upper_point(neg_part(), r(0)), InvalidHamiltonian);
}

TEST_CASE("upper/lower points match the excursion-scan oracle") {
  for (int i = 0; i < 30; ++i) {
    CorpusCase cs = random_pair(31, i);
    Rng rng(31, i, 5);
    for (int k = 0; k < 8; ++k) {
      Rational p = rng.rational(-9, 9, 8);
      auto pair = upper_lower_pair(cs.H, p);
      CHECK(pair.p_plus == oracle::upper_point(cs.H, p));
      CHECK(pair.p_minus == oracle::lower_point(cs.H, p));
      // -inf < p- <= p <= p+ <= +inf
      CHECK(pair.p_minus <= p);
      CHECK(ExtendedRational(p) <= pair.p_plus);
    }
  }
}

TEST_CASE("characteristic points: frozen examples") {
  // H = |p|, F = max(-p, 0): single positive characteristic point at 0.
  auto cps = characteristic_points(abs_h(), neg_part());
  REQUIRE(cps.size() == 1);
  CHECK(cps[0].location == r(0));
  CHECK(cps[0].sign == PointSign::Positive);

  // H = W, F = relax(const 1/2): contact points at -1/2 and 5/4 carry both
  // signs (H rises strictly on both sides of each).
  auto cpw = characteristic_points(w_shape(), w_relaxed_half());
  REQUIRE(cpw.size() == 4);
  CHECK(cpw[0] == CharPoint{r(-1, 2), PointSign::Positive});
  CHECK(cpw[1] == CharPoint{r(-1, 2), PointSign::Negative});
  CHECK(cpw[2] == CharPoint{r(5, 4), PointSign::Positive});
  CHECK(cpw[3] == CharPoint{r(5, 4), PointSign::Negative});

  // Contact confined to a strictly decreasing stretch of H: no one-sided
  // excursion can start there, so the list is empty.
  PLFunction steeper({{r(-1), r(1)}}, r(-1), r(-2));
  CHECK(characteristic_points(abs_h(), steeper).empty());
}

TEST_CASE("characteristic sign conditions hold definitionally") {
  // Verify the one-sided strict excursions by pointwise probing.
  for (int i = 0; i < 30; ++i) {
    CorpusCase cs = random_pair(37, i);
    PLFunction R = relax(cs.H, cs.F0);
    for (const auto& c : characteristic_points(cs.H, R)) {
      Rational level = cs.H.eval(c.location);
      CHECK(R.eval(c.location) == level);
      Rational eps(1, 4096);
      for (const auto& pt : cs.H.breakpoints()) {
        if (pt.x > c.location) {
          eps = min(eps, (pt.x - c.location) / r(2));
          break;
        }
      }
      if (c.sign == PointSign::Positive) CHECK(cs.H.eval(c.location + eps) > level);
      Rational eps2(1, 4096);
      for (auto it = cs.H.breakpoints().rbegin(); it != cs.H.breakpoints().rend(); ++it) {
        if (it->x < c.location) {
          eps2 = min(eps2, (c.location - it->x) / r(2));
          break;
        }
      }
      if (c.sign == PointSign::Negative) CHECK(cs.H.eval(c.location - eps2) < level);
    }
  }
}

TEST_CASE("limiter points: W-shape fixture") {
  auto lims = limiter_points(w_shape(), w_relaxed_half());
  // Both contact points carry both signs; intervals [-5/4,1/2] and [1/2,+inf).
  REQUIRE(lims.size() == 4);
  auto find = [&](const Rational& p, PointSign s) -> const LimiterPoint* {
    for (const auto& l : lims)
      if (l.p == p && l.sign == s) return &l;
    return nullptr;
  };
  const auto* a = find(r(-1, 2), PointSign::Negative);
  REQUIRE(a != nullptr);
  CHECK(a->interval == ExtendedInterval(r(-5, 4), r(1, 2)));
  const auto* b = find(r(5, 4), PointSign::Negative);
  REQUIRE(b != nullptr);
  CHECK(b->interval.lo == ExtendedRational(r(1, 2)));
  CHECK(b->interval.hi.is_pos_inf());
  CHECK(find(r(-1, 2), PointSign::Positive) != nullptr);
  CHECK(find(r(5, 4), PointSign::Positive) != nullptr);
}

TEST_CASE("limiter points require semi-coercivity unless the envelope fallback is on") {
  PLFunction f0 = PLFunction::constant(r(1, 2));
  CHECK_THROWS_AS(limiter_points(w_shape(), f0, /*envelope_fallback=*/false), NotSemiCoercive);
  auto lims = limiter_points(w_shape(), f0, true);
  CHECK(!lims.empty());
}

TEST_CASE("guerand operator equals the relaxation operator") {
  CHECK(guerand_operator(w_shape(), w_relaxed_half()) == w_relaxed_half());
  CHECK(guerand_operator(abs_h(), neg_part()) == neg_part());
  // V-shaped Hamiltonian with its own lower envelope: minimal self-relaxed data.
  PLFunction v({{r(0), r(0)}}, r(-2), r(1));
  PLFunction vm = lower_envelope(v);
  CHECK(guerand_operator(v, vm) == vm);
  for (int i = 0; i < 25; ++i) {
    CorpusCase cs = random_pair(41, i);
    CHECK(guerand_operator(cs.H, cs.F0) == relax(cs.H, cs.F0));
  }
}

TEST_CASE("limiter points coincide with characteristic points of the relaxed condition") {
  for (int i = 0; i < 25; ++i) {
    CorpusCase cs = random_pair(43, i);
    auto lims = limiter_points_unchecked(cs.H, cs.F0);
    auto chars = characteristic_points(cs.H, relax(cs.H, cs.F0));
    std::vector<std::pair<Rational, int>> a, b;
    for (const auto& c : chars) a.emplace_back(c.location, c.sign == PointSign::Positive ? 1 : 0);
    for (const auto& l : lims) b.emplace_back(l.p, l.sign == PointSign::Positive ? 1 : 0);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("empty limiter set leaves the Hamiltonian untouched") {
  CHECK(apply_limiter_plateaus(w_shape(), {}) == w_shape());
}

TEST_CASE("transversal crossing on a monotone piece") {
  // F0 crosses |p| once, transversally, on the rising branch; the relaxed
  // condition freezes a plateau from the crossing onward.
  PLFunction f0({{r(1, 2), r(1, 2)}}, r(-1, 3), r(0));  // non-increasing, crosses at 1/2
  PLFunction R = relax(abs_h(), f0);
  PLFunction J = guerand_operator(abs_h(), f0);
  CHECK(R == J);
  CHECK(R.eval(r(10)) == r(1, 2));
}
