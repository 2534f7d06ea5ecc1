#pragma once

#include "hjrelax/pl_function.hpp"

namespace hjrelax::fixtures {

inline Rational r(long n, long d = 1) {
  return Rational(n, d);
}

/// |p|
inline PLFunction abs_h() {
  return PLFunction::abs_value();
}

/// W-shape: breakpoints (-1,0), (0,1), (1,0), tail slopes -2 / +2.
inline PLFunction w_shape() {
  return PLFunction({{r(-1), r(0)}, {r(0), r(1)}, {r(1), r(0)}}, r(-2), r(2));
}

/// max(-p, 0): the lower envelope of |p| and the relaxed condition of the
/// all-zero boundary function.
inline PLFunction neg_part() {
  return PLFunction({{r(0), r(0)}}, r(-1), r(0));
}

/// max(0, -2(p+1)): lower envelope of the W-shape.
inline PLFunction w_lower_envelope() {
  return PLFunction({{r(-1), r(0)}}, r(-2), r(0));
}

/// max(1/2, -2(p+1)): relaxed condition of the constant 1/2 along the W-shape.
inline PLFunction w_relaxed_half() {
  return PLFunction({{r(-5, 4), r(1, 2)}}, r(-2), r(0));
}

/// Two-kink asymmetric Hamiltonian: -1-p for p <= 0, p-1 on [0,1], 2(p-1) after.
inline PLFunction asym_h() {
  return PLFunction({{r(0), r(-1)}, {r(1), r(0)}}, r(-1), r(2));
}

}  // namespace hjrelax::fixtures
