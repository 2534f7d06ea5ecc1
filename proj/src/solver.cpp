#include "hjrelax/solver.hpp"

#include <algorithm>
#include <cmath>

#include "hjrelax/relaxation.hpp"

namespace hjrelax {

namespace {

// Double-precision view of a PLFunction for the marching loop.
struct PLDouble {
  std::vector<double> xs, ys;
  double sl = 0.0, sr = 0.0;

  explicit PLDouble(const PLFunction& f) {
    for (const auto& pt : f.breakpoints()) {
      xs.push_back(pt.x.to_double());
      ys.push_back(pt.y.to_double());
    }
    sl = f.slope_left().to_double();
    sr = f.slope_right().to_double();
  }

  double eval(double p) const {
    if (p <= xs.front()) return ys.front() + sl * (p - xs.front());
    if (p >= xs.back()) return ys.back() + sr * (p - xs.back());
    auto it = std::upper_bound(xs.begin(), xs.end(), p);
    std::size_t i = static_cast<std::size_t>(it - xs.begin()) - 1;
    double s = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
    return ys[i] + s * (p - xs[i]);
  }

  // Godunov numerical Hamiltonian: max over [p, q] if p <= q, else min.
  double godunov(double q, double p) const {
    double lo = std::min(p, q), hi = std::max(p, q);
    bool use_max = (p <= q);
    double m = use_max ? std::max(eval(lo), eval(hi)) : std::min(eval(lo), eval(hi));
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i] > lo && xs[i] < hi) m = use_max ? std::max(m, ys[i]) : std::min(m, ys[i]);
    }
    return m;
  }
};

Rational max_abs_slope_over(const PLFunction& f, const Rational& a, const Rational& b) {
  Rational m(0);
  const auto& pts = f.breakpoints();
  if (a < pts.front().x) m = max(m, f.slope_left().abs());
  if (b > pts.back().x) m = max(m, f.slope_right().abs());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    // Segment (x_i, x_{i+1}) overlaps (a, b)?
    if (pts[i].x < b && a < pts[i + 1].x) m = max(m, f.segment_slope(i).abs());
  }
  return m;
}

void validate_config(const GridConfig& cfg) {
  if (!(cfg.L > Rational(0)) || !(cfg.dx > Rational(0)) || !(cfg.T > Rational(0)))
    throw InvalidInputs("grid configuration needs positive L, dx, T");
  if (!(cfg.cfl > Rational(0)) || cfg.cfl > Rational(1)) throw CflViolation("cfl must lie in (0, 1]");
  Rational cells = cfg.L / cfg.dx;
  if (cells.denominator() != 1 || cells.sign() <= 0)
    throw InvalidInputs("L/dx must be a positive integer");
}

std::size_t cell_count(const GridConfig& cfg) {
  return static_cast<std::size_t>((cfg.L / cfg.dx).numerator().get_ui());
}

}  // namespace

std::size_t GridSolution::comparison_limit() const {
  double reach = config.L.to_double() - config.T.to_double() * lip;
  std::size_t limit = 0;
  for (std::size_t j = 0; j < nodes(); ++j)
    if (x(j) <= reach) limit = j;
  return limit;
}

GridSolution solve(const PLFunction& H, const BoundarySpec& bc, std::vector<double> u0,
                   const GridConfig& cfg) {
  if (!H.is_coercive()) throw InvalidHamiltonian();
  validate_config(cfg);
  const std::size_t cells = cell_count(cfg);
  const std::size_t n = cells + 1;
  if (u0.size() != n) throw InvalidInputs("initial data length must match the grid");

  // Boundary flux at x = 0.
  PLFunction boundary_flux = PLFunction::constant(Rational(0));
  bool dirichlet = false, dirichlet_relaxed_form = true;
  double g_value = 0.0;
  if (const auto* dyn = std::get_if<DynamicBC>(&bc)) {
    if (!dyn->f0.is_nonincreasing()) throw InvalidBoundary();
    boundary_flux = dyn->f0;
  } else if (const auto* neu = std::get_if<NeumannBC>(&bc)) {
    boundary_flux = neumann_relaxed(H, neu->h);
  } else {
    const auto& dir = std::get<DirichletBC>(bc);
    dirichlet = true;
    dirichlet_relaxed_form = dir.relaxed;
    g_value = dir.g.to_double();
    boundary_flux = dirichlet_relaxed_form ? lower_envelope(H) : H;
  }

  // A-priori gradient range of the data, margin 1 on both sides.
  const double dxd = cfg.dx.to_double();
  double gmin = 0.0, gmax = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    double d = (u0[j + 1] - u0[j]) / dxd;
    gmin = j == 0 ? d : std::min(gmin, d);
    gmax = j == 0 ? d : std::max(gmax, d);
  }
  Rational lo = Rational::from_double(gmin) - Rational(1);
  Rational hi = Rational::from_double(gmax) + Rational(1);
  Rational lip = max(max_abs_slope_over(H, lo, hi), max_abs_slope_over(boundary_flux, lo, hi));
  if (!(cfg.T * lip < cfg.L))
    throw DomainTooShort("domain of dependence of the right boundary covers the whole grid");

  GridSolution sol;
  sol.config = cfg;
  sol.lip = lip.to_double();
  double dt = lip.sign() == 0 ? cfg.cfl.to_double() * dxd : (cfg.cfl * cfg.dx / lip).to_double();
  sol.dt = dt;

  PLDouble Hd(H), Fb(boundary_flux);
  const double T = cfg.T.to_double();

  sol.times.push_back(0.0);
  sol.frames.push_back(u0);
  std::vector<double> cur = std::move(u0), next(n);
  double t = 0.0;
  while (t < T) {
    double step = std::min(dt, T - t);
    for (std::size_t j = 1; j + 1 < n; ++j) {
      double dm = (cur[j] - cur[j - 1]) / dxd;
      double dp = (cur[j + 1] - cur[j]) / dxd;
      next[j] = cur[j] - step * Hd.godunov(dm, dp);
    }
    double dp0 = (cur[1] - cur[0]) / dxd;
    if (dirichlet)
      next[0] = std::min(g_value, cur[0] - step * Fb.eval(dp0));
    else
      next[0] = cur[0] - step * Fb.eval(dp0);
    double dmN = (cur[n - 1] - cur[n - 2]) / dxd;
    next[n - 1] = cur[n - 1] - step * Hd.eval(dmN);

    t = (T - t <= dt) ? T : t + dt;
    sol.times.push_back(t);
    sol.frames.push_back(next);
    std::swap(cur, next);
  }
  return sol;
}

std::vector<double> refinement_study(const PLFunction& H, const PLFunction& F0a, const PLFunction& F0b,
                                     const std::function<double(double)>& u0, const GridConfig& base,
                                     const std::vector<Rational>& dx_ladder) {
  std::vector<double> diffs;
  for (const auto& dx : dx_ladder) {
    GridConfig cfg = base;
    cfg.dx = dx;
    validate_config(cfg);
    std::size_t n = cell_count(cfg) + 1;
    std::vector<double> data(n);
    for (std::size_t j = 0; j < n; ++j) data[j] = u0(dx.to_double() * static_cast<double>(j));
    GridSolution a = solve(H, DynamicBC{F0a}, data, cfg);
    GridSolution b = solve(H, DynamicBC{F0b}, data, cfg);
    std::size_t limit = std::min(a.comparison_limit(), b.comparison_limit());
    double sup = 0.0;
    for (std::size_t j = 0; j <= limit; ++j)
      sup = std::max(sup, std::abs(a.frames.back()[j] - b.frames.back()[j]));
    diffs.push_back(sup);
  }
  return diffs;
}

std::vector<double> linear_initial_data(const GridConfig& cfg, const Rational& gradient) {
  std::size_t n = cell_count(cfg) + 1;
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j)
    out[j] = (gradient * cfg.dx * Rational(static_cast<long>(j))).to_double();
  return out;
}

}  // namespace hjrelax
