// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include "mordell/rational.hpp"

// Pinned decimal constants used across the height and certification
// machinery.  Every value here is an exact rational sitting on the *safe*
// side of the real quantity it stands for (lower bounds rounded down,
// upper bounds rounded up); the test suite recomputes the underlying reals
// in interval arithmetic and checks each inequality, and the window
// constants can be recertified from scratch with verify_family_z_window.

namespace mordell::consts {

// Additive floor in the archimedean local-height bound (doubled
// normalization): for y^2 = x^3 + n with n > 0 and a point with y != 0,
//   lambda_inf(P) > (1/12) log n + (1/2) log(|beta| / delta^3) + arch_point_offset.
inline Rat arch_point_offset() { return parse_decimal("0.31494685"); }

// Curve-level floor folding in the worst finite local contribution: for
// squarefree n > 0, every nonzero rational point satisfies
//   hhat(P) > (1/12) log n + arch_uniform_offset.
inline Rat arch_uniform_offset() { return parse_decimal("-0.147152"); }

// Certified window for the shifted doubling multiplier z along the real
// locus of y^2 = x^3 + a^6 + 16 b^6 under the shift x' = x + c a^2 + 4 b^2,
// uniformly over all real a/b.  c = 3 suits points at x = -a^2, c = 2 suits
// x = +-2ab; the window only depends on c.
inline Rat shift_z_lo(int c) {
  if (c == 2) return parse_decimal("0.062326");
  if (c == 3) return parse_decimal("0.038068");
  throw DomainError("shift_z_lo: shift coefficient must be 2 or 3");
}

inline Rat shift_z_hi(int c) {
  if (c != 2 && c != 3) throw DomainError("shift_z_hi: shift coefficient must be 2 or 3");
  return parse_decimal("120.531634");
}

struct RatWindow {
  Rat lo, hi;
};

// Window of hhat(P_i) - (1/3) log m for the three standard generators of
// y^2 = x^3 + m, m = a^6 + 16 b^6:  P_1 = (-a^2, 4b^3),
// P_2 = (2ab, a^3 + 4b^3), P_3 = (-2ab, a^3 - 4b^3).
inline RatWindow family_height_window(int i) {
  switch (i) {
    case 1: return {parse_decimal("-0.7441"), parse_decimal("0.5409")};
    case 2: return {parse_decimal("-0.7579"), parse_decimal("1.0515")};
    case 3: return {parse_decimal("-0.5113"), parse_decimal("0.5665")};
    default: throw DomainError("family_height_window: index must be 1, 2 or 3");
  }
}

// gamma_s^s, the s-th power of the Hermite constant for ranks 1..4; used to
// turn regulator bounds into lattice-index bounds.
inline Rat hermite_pow(int s) {
  switch (s) {
    case 1: return Rat(1);
    case 2: return make_rat(4, 3);
    case 3: return Rat(2);
    case 4: return Rat(4);
    default: throw DomainError("hermite_pow: rank must be between 1 and 4");
  }
}

}  // namespace mordell::consts
