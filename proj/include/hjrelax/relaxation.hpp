#pragma once

#include "hjrelax/pl_function.hpp"

namespace hjrelax {

/// Lower relaxation: p -> sup over [p, +inf) of min(F0, H).
/// Requires H coercive and F0 non-increasing.
PLFunction sub_relax(const PLFunction& H, const PLFunction& F0);

/// Upper relaxation: p -> inf over (-inf, p] of max(F0, H).
PLFunction super_relax(const PLFunction& H, const PLFunction& F0);

/// The relaxed boundary condition: sub_relax on {F0 >= H}, super_relax on
/// {F0 <= H}. In builds with assertions enabled the result is cross-checked
/// against super_relax(H, sub_relax(H, F0)) and sub_relax(H, super_relax(H, F0));
/// disagreement raises InternalMismatch (it is a theorem that they coincide).
PLFunction relax(const PLFunction& H, const PLFunction& F0);

/// Lower non-increasing envelope of H: p -> inf over (-inf, p] of H.
/// The minimal self-relaxed boundary function.
PLFunction lower_envelope(const PLFunction& H);

/// f_pos where selector >= 0, f_neg where selector <= 0. The two functions
/// must agree on {selector = 0}.
PLFunction piecewise_select(const PLFunction& selector, const PLFunction& f_pos, const PLFunction& f_neg);

}  // namespace hjrelax
