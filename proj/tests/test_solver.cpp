#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "hjrelax/relaxation.hpp"
#include "hjrelax/solver.hpp"

using namespace hjrelax;
using namespace hjrelax::fixtures;

namespace {

GridConfig cfg_default() {
  return GridConfig{r(2), r(1, 50), r(9, 10), r(1)};
}

double germ_line_error(const PLFunction& H, const PLFunction& F, const Rational& p,
                       const GridConfig& cfg) {
  GridSolution sol = solve(H, DynamicBC{F}, linear_initial_data(cfg, p), cfg);
  double hp = H.eval(p).to_double();
  double pd = p.to_double();
  double worst = 0.0;
  const auto& last = sol.frames.back();
  for (std::size_t j = 0; j < last.size(); ++j)
    worst = std::max(worst, std::abs(last[j] - (pd * sol.x(j) - hp * sol.times.back())));
  return worst;
}

}  // namespace

TEST_CASE("config validation") {
  PLFunction F = neg_part();
  auto cfg = cfg_default();
  cfg.cfl = r(2);
  CHECK_THROWS_AS(solve(abs_h(), DynamicBC{F}, linear_initial_data(cfg_default(), r(0)), cfg),
                  CflViolation);
  cfg = cfg_default();
  cfg.dx = r(3, 7);
  CHECK_THROWS_AS(solve(abs_h(), DynamicBC{F}, {0.0, 0.0}, cfg), InvalidInputs);
  cfg = cfg_default();
  CHECK_THROWS_AS(solve(abs_h(), DynamicBC{F}, {0.0, 0.0}, cfg), InvalidInputs);  // wrong length
  // Domain shorter than the dependence cone.
  cfg = cfg_default();
  cfg.L = r(1, 2);
  cfg.dx = r(1, 100);
  CHECK_THROWS_AS(solve(abs_h(), DynamicBC{F}, linear_initial_data(cfg, r(-1)), cfg),
                  DomainTooShort);
}

TEST_CASE("germ gradients reproduce exact linear profiles") {
  // H = |p|, strong condition max(-p, 0), germ = (-inf, 0].
  auto cfg = cfg_default();
  PLFunction F = neg_part();
  CHECK(germ_line_error(abs_h(), F, r(-1), cfg) <= 1e-10);
  CHECK(germ_line_error(abs_h(), F, r(-1, 3), cfg) <= 1e-10);
  CHECK(germ_line_error(abs_h(), F, r(0), cfg) <= 1e-10);
}

TEST_CASE("non-germ gradients deviate at the boundary") {
  auto cfg = cfg_default();
  PLFunction F = neg_part();
  // p = 1 is outside the germ: the boundary node must leave the line.
  GridSolution sol = solve(abs_h(), DynamicBC{F}, linear_initial_data(cfg, r(1)), cfg);
  double expect = 1.0 * 0.0 - 1.0 * sol.times.back();
  CHECK(std::abs(sol.frames.back()[0] - expect) >= 1e-3);
}

TEST_CASE("constant data under Neumann h=0 stays constant in the dependence region") {
  auto cfg = cfg_default();
  std::size_t n = 101;
  cfg.dx = r(1, 50);
  std::vector<double> u0(n, 1.0);
  GridSolution sol = solve(abs_h(), NeumannBC{r(0)}, u0, cfg);
  std::size_t limit = sol.comparison_limit();
  for (std::size_t j = 0; j <= limit; ++j) CHECK(sol.frames.back()[j] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("interior update is monotone in every stencil value") {
  // Random perturbation test on a tiny grid, one step.
  GridConfig cfg{r(1), r(1, 4), r(9, 10), r(1, 100)};
  PLFunction H = w_shape();
  PLFunction F = w_relaxed_half();
  std::vector<double> base = {0.3, 0.1, -0.2, 0.05, 0.4};
  GridSolution ref = solve(H, DynamicBC{F}, base, cfg);
  for (std::size_t k = 0; k < base.size(); ++k) {
    for (double eps : {1e-6, 1e-4}) {
      auto bumped = base;
      bumped[k] += eps;
      GridSolution alt = solve(H, DynamicBC{F}, bumped, cfg);
      for (std::size_t j = 0; j < base.size(); ++j)
        CHECK(alt.frames[1][j] >= ref.frames[1][j] - 1e-15);
    }
  }
}

TEST_CASE("dirichlet boundary enforces the obstacle") {
  GridConfig cfg{r(2), r(1, 20), r(9, 10), r(1, 2)};
  std::size_t n = 41;
  std::vector<double> u0(n, 1.0);
  GridSolution sol = solve(abs_h(), DirichletBC{r(0), true}, u0, cfg);
  CHECK(sol.frames.back()[0] <= 0.0 + 1e-12);
  // Interior far from both boundaries is untouched at early times.
  CHECK(sol.frames.back()[n / 2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("refinement study: self-relaxed data gives identically zero differences") {
  auto cfg = cfg_default();
  PLFunction F = w_relaxed_half();
  auto diffs = refinement_study(
      w_shape(), F, relax(w_shape(), F), [](double x) { return -x; }, cfg,
      {r(1, 25), r(1, 50)});
  REQUIRE(diffs.size() == 2);
  CHECK(diffs[0] == 0.0);
  CHECK(diffs[1] == 0.0);
}

TEST_CASE("refinement study: weak and strong runs converge together") {
  GridConfig cfg{r(4), r(1, 50), r(9, 10), r(1)};
  PLFunction F0 = PLFunction::affine(r(-1), r(0));  // -p, crosses the W twice
  PLFunction R = relax(w_shape(), F0);
  REQUIRE(F0 != R);
  auto diffs = refinement_study(
      w_shape(), F0, R, [](double x) { return -x; }, cfg, {r(1, 50), r(1, 100), r(1, 200)});
  REQUIRE(diffs.size() == 3);
  CHECK(diffs[0] > 0.0);
  CHECK(diffs[1] <= diffs[0]);
  CHECK(diffs[2] <= diffs[1]);
  CHECK(diffs[2] <= 5e-2);
}
