// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <utility>

#include "mordell/interval.hpp"
#include "mordell/rational.hpp"

namespace mordell {

// One doubling step on y^2 = x^3 + n, viewed through the shift x' = x + d,
// multiplies x'^4 by
//
//   z(x) = 1 - 6 t^2 + 8 (1 - k) t^3 + (12 k - 3) t^4,
//   t = d / x',   k = n / d^3,
//
// and the real locus x >= -n^{1/3} maps to t in (0, 1/(1 - k^{1/3})] when
// 0 < k < 1.  The series evaluator needs a window [z_lo, z_hi] containing
// z at every point of the orbit; this header certifies such windows by
// adaptive interval subdivision in t.  z is affine in k, so one pair of
// endpoint evaluations encloses a whole k-interval exactly, which keeps the
// two-parameter (family) sweeps one-dimensional.

struct SweepStats {
  long boxes = 0;     // interval boxes evaluated
  int max_depth = 0;  // deepest subdivision reached
};

// Enclosure of z over t in [t1, t2], k in [k1, k2] (all exact rationals).
Interval z_enclosure(const Rat& t1, const Rat& t2, const Rat& k1, const Rat& k2,
                     mpfr_prec_t prec);

// Exact rational upper bound for 1/(1 - k^{1/3}), the right edge of the
// t-domain.  Requires 0 < k < 1.
Rat tau_edge_upper(const Rat& k, mpfr_prec_t prec);

// True iff z([0, tau_hi] x [k1, k2]) provably lies inside [z_lo, z_hi].
// False either on a provable escape or when max_depth boxes cannot decide;
// retry deeper to distinguish.  Throws BudgetError past the box budget.
bool certify_z_window(const Rat& tau_hi, const Rat& k1, const Rat& k2,
                      const Rat& z_lo, const Rat& z_hi, mpfr_prec_t prec,
                      int max_depth, SweepStats* stats);

// Certified enclosure [lo, hi] of the exact range of z over the full
// t-domain for a single k (0 < k < 1), tightened until both endpoints are
// within `slack` of the true extrema.
std::pair<Rat, Rat> certified_z_range(const Rat& k, mpfr_prec_t prec, double slack);

// Certified enclosure of k = n / d^3 over the whole curve family
// n = a^6 + 16 b^6, d = c a^2 + 4 b^2, with a/b ranging over (0, inf)
// (c = 2 or 3).  Substituting s = 1 / ((a/b)^2 + 1) compactifies the
// parameter to s in [0, 1].
std::pair<Rat, Rat> family_k_range(int c, mpfr_prec_t prec, double slack);

// Recertify from scratch that [z_lo, z_hi] contains z everywhere on the
// real locus of every curve of the family with shift coefficient c.  This
// is the independent check behind the frozen windows in constants.hpp.
bool verify_family_z_window(int c, const Rat& z_lo, const Rat& z_hi,
                            mpfr_prec_t prec, SweepStats* stats);

}  // namespace mordell
