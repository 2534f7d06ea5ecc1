#pragma once

#include <vector>

#include "hjrelax/pl_function.hpp"

namespace hjrelax {

enum class PointSign { Positive, Negative };

/// Contact point of H and a boundary function with a one-sided strict
/// excursion of H (H above its level just right of a positive point,
/// below its level just left of a negative one).
struct CharPoint {
  Rational location;
  PointSign sign;
  friend bool operator==(const CharPoint& a, const CharPoint& b) {
    return a.location == b.location && a.sign == b.sign;
  }
};

/// The excursion endpoints attached to p by H alone:
/// p- is the last return to level H(p) on the left, p+ the first on the right,
/// with p itself when the level is immediately re-attained on that side.
struct UpperLowerPair {
  Rational p;
  Rational p_minus;
  ExtendedRational p_plus;
};

/// A plateau generator for the limiter-based relaxation: the operator freezes
/// the value H(p) on [p-, p+].
struct LimiterPoint {
  Rational p;
  PointSign sign;
  ExtendedInterval interval;  // [p-, p+]
};

/// First return of H to level H(p) on the right; +inf when the excursion never
/// closes; p itself when H does not rise strictly right of p.
ExtendedRational upper_point(const PLFunction& H, const Rational& p);
/// Mirror image on the left; always finite by coercivity.
Rational lower_point(const PLFunction& H, const Rational& p);

UpperLowerPair upper_lower_pair(const PLFunction& H, const Rational& p);

/// Complete list of characteristic points of F along H, sorted by location;
/// a point carrying both signs appears twice (positive entry first).
std::vector<CharPoint> characteristic_points(const PLFunction& H, const PLFunction& F);

/// Limiter points of F0, computed from their defining quantified conditions
/// over a finite witness set, then cross-checked against the characteristic
/// points of the relaxed condition (the two sets coincide; a mismatch is an
/// implementation bug and raises InternalMismatch).
///
/// F0 must be semi-coercive; when it is not and envelope_fallback is set, F0
/// is replaced by max(F0, lower_envelope(H)) first, otherwise NotSemiCoercive
/// is thrown.
std::vector<LimiterPoint> limiter_points(const PLFunction& H, const PLFunction& F0,
                                         bool envelope_fallback = true);

/// Same computation without the cross-check (used by tests that compare the
/// two routes explicitly).
std::vector<LimiterPoint> limiter_points_unchecked(const PLFunction& H, const PLFunction& F0,
                                                   bool envelope_fallback = true);

/// The limiter-based relaxation: H(p_a) frozen on each [p_a-, p_a+], H elsewhere.
PLFunction guerand_operator(const PLFunction& H, const PLFunction& F0, bool envelope_fallback = true);

/// Assembly step of guerand_operator: freeze H to the constant H(lo) on each
/// closed interval (exposed for direct testing of the empty-set branch).
PLFunction apply_limiter_plateaus(const PLFunction& H, const std::vector<ExtendedInterval>& intervals);

}  // namespace hjrelax
