#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hjrelax/godunov.hpp"
#include "hjrelax/pl_function.hpp"

namespace hjrelax {

struct GridConfig {
  Rational L;    // domain [0, L]
  Rational dx;   // L / dx must be a positive integer
  Rational cfl;  // in (0, 1]
  Rational T;    // final time
};

struct GridSolution {
  GridConfig config;
  double dt = 0.0;                        // base time step (last step may be shorter)
  double lip = 0.0;                       // Lipschitz bound used for dt and the dependence guard
  std::vector<double> times;              // frame times, last one == T
  std::vector<std::vector<double>> frames;

  std::size_t nodes() const { return frames.empty() ? 0 : frames.front().size(); }
  double x(std::size_t j) const { return config.dx.to_double() * static_cast<double>(j); }

  /// Largest index j with x_j inside the region unreachable from the right
  /// boundary within time T at speed lip (inclusive).
  std::size_t comparison_limit() const;
};

/// Explicit monotone marching scheme for u_t + H(u_x) = 0 on [0, L]:
/// Godunov numerical Hamiltonian in the interior (backward difference first),
/// boundary update at x = 0 from the boundary specification, one-sided update
/// at x = L guarded by the domain-of-dependence check.
GridSolution solve(const PLFunction& H, const BoundarySpec& bc, std::vector<double> u0,
                   const GridConfig& cfg);

/// Sup-norm differences, inside the comparison region at final time, between
/// runs with boundary functions F0a and F0b on a ladder of grids (same L, cfl,
/// T; one entry per dx).
std::vector<double> refinement_study(const PLFunction& H, const PLFunction& F0a, const PLFunction& F0b,
                                     const std::function<double(double)>& u0, const GridConfig& base,
                                     const std::vector<Rational>& dx_ladder);

/// Nodal values of the initial data p*x on the grid.
std::vector<double> linear_initial_data(const GridConfig& cfg, const Rational& gradient);

}  // namespace hjrelax
