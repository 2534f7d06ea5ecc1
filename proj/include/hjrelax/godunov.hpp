#pragma once

#include <variant>
#include <vector>

#include "hjrelax/pl_function.hpp"

namespace hjrelax {

/// The set {H = relaxed condition}: exactly the gradients whose linear
/// profiles p*x - H(p)*t solve the boundary-value problem.
struct Germ {
  std::vector<ExtendedInterval> components;  // sorted, pairwise disjoint

  bool contains(const Rational& p) const {
    for (const auto& c : components)
      if (c.contains(ExtendedRational(p))) return true;
    return false;
  }
  friend bool operator==(const Germ& a, const Germ& b) { return a.components == b.components; }
};

struct DynamicBC {
  PLFunction f0;
};
struct NeumannBC {
  Rational h;
};
struct DirichletBC {
  Rational g;
  bool relaxed = true;  // false: weak form min(g, u - dt*H(D+u)) at the boundary
};
using BoundarySpec = std::variant<DynamicBC, NeumannBC, DirichletBC>;

/// Classical two-point Godunov flux: max of H over [p,q] when p <= q,
/// min over [q,p] when p >= q; G(p,p) = H(p).
Rational godunov_flux(const PLFunction& H, const Rational& q, const Rational& p);

/// q -> G(q, p) as a piecewise-linear function (non-decreasing in q).
PLFunction godunov_flux_profile(const PLFunction& H, const Rational& p);

/// Set-valued semi-fluxes. The empty directions are encoded as the infinite
/// singletons [-inf,-inf] / [+inf,+inf].
ExtendedInterval lower_semiflux(const PLFunction& H, const Rational& q, const Rational& p);
ExtendedInterval upper_semiflux(const PLFunction& H, const Rational& q, const Rational& p);

/// The unique lambda with F0(q) = G(q, p) for some q; equals the relaxed
/// condition at p. Non-semi-coercive F0 is first replaced by
/// max(F0, lower_envelope(H)) unless envelope_fallback is false.
Rational apply_godunov(const PLFunction& H, const PLFunction& F0, const Rational& p,
                       bool envelope_fallback = true);

/// Value plus the extreme witnesses q at which it is attained.
struct GodunovApplication {
  Rational value;
  Rational witness_lo;
  Rational witness_hi;
};
GodunovApplication apply_godunov_witnesses(const PLFunction& H, const PLFunction& F0, const Rational& p,
                                           bool envelope_fallback = true);

/// The unique value of F0 on {q : F0(q) in lower/upper semiflux(q, p)};
/// identical to sub_relax / super_relax at p.
Rational apply_lower_semiflux(const PLFunction& H, const PLFunction& F0, const Rational& p,
                              bool envelope_fallback = true);
Rational apply_upper_semiflux(const PLFunction& H, const PLFunction& F0, const Rational& p,
                              bool envelope_fallback = true);

/// Exact interval decomposition of {H = relax(H, F0)}; computed twice (set
/// decomposition and the two-sided relaxation inequality) and cross-checked.
Germ germ(const PLFunction& H, const PLFunction& F0);

/// Boundary-trace admissibility sign condition for level h at gradient p;
/// equivalent to H(p) = G(h, p).
bool bln_check(const PLFunction& H, const Rational& h, const Rational& p);

/// Relaxed flux of the Neumann problem with datum h: p -> G(h, p).
PLFunction neumann_relaxed(const PLFunction& H, const Rational& h);

/// Relaxed Dirichlet condition with datum A0: max(A0, lower_envelope(H)).
PLFunction dirichlet_relaxed(const PLFunction& H, const Rational& A0);

}  // namespace hjrelax
