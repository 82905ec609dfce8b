// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include "mordell/interval.hpp"
#include "mordell/point.hpp"
#include "mordell/weierstrass.hpp"

namespace mordell {

// Enclosures of the period-lattice quantities behind the archimedean
// lower bounds for y^2 = x^3 + n, n > 0.  The curves all share the
// j-invariant-0 lattice up to scaling, so one set of constants serves the
// whole family; the frozen decimals in constants.hpp are rounded safe
// against these live values (the tests check both directions).
struct PeriodData {
  Interval agm_main;       // AGM(2*3^{1/4}, sqrt(2 sqrt(3) - 3))
  Interval agm_twist;      // AGM(2*3^{1/4}, sqrt(2 sqrt(3) + 3))
  Interval real_period;    // 2 pi / agm_main
  Interval period_ratio;   // imaginary part of the lattice ratio: agm_main / (2 agm_twist)
  Interval nome_mag;       // |q| = exp(-2 pi * period_ratio)
  Interval theta_gap;      // 1 + |q| + |q|^3 + |q|^6 + |q|^10 / (1 - |q|^5)
  Interval point_offset;   // log(432/|q|)/16 - log(agm_main)/4 - log(theta_gap)/2
  Interval uniform_offset; // point_offset - (2/3) log 2
};

PeriodData period_data(mpfr_prec_t prec);

// Lower bound for the archimedean local height (doubled normalization) of
// P = (alpha/delta^2, beta/delta^3):
//   lambda_inf(P) > (1/12) log n + (1/2) log(|beta| / delta^3) + point_offset.
// Requires n > 0 and y(P) != 0; the returned interval encloses the
// right-hand side, so its lower endpoint is the certified floor.
Interval arch_height_floor(const MordellCurve& curve, const RationalPoint& P,
                           mpfr_prec_t prec);

// Curve-level floor for canonical heights: for squarefree n > 0 every
// nonzero rational point satisfies
//   hhat(P) > (1/12) log n + uniform_offset.
// The finite places cannot fall below the -(2/3) log 2 folded into
// uniform_offset on such curves, which is why squarefreeness is required
// (DomainError if n is provably not squarefree, BudgetError if undecided).
Interval canonical_height_floor(const MordellCurve& curve, mpfr_prec_t prec);

// Shifted doubling series for the archimedean local height.  With
// x' = x + d and z as in zwindow.hpp,
//   lambda_inf(P) = log x'(P) + sum_{j>=0} 4^{-(j+1)} log z(x_j),
// where x_0 = x(P) and x_{j+1} is the abscissa after doubling.  `terms`
// leading terms are computed exactly; the rest contribute
// 4^{-terms}/3 * [log z_lo, log z_hi] provided z stays inside the window,
// which is what a certified window [z_lo, z_hi] guarantees.
struct ArchSeriesConfig {
  Int n;           // curve the window is certified for
  Int d;           // shift, d^3 > n
  int terms = 3;   // exactly-computed series terms (>= 1)
  Rat z_lo, z_hi;  // certified window for z along the real locus
};

// Window frozen for the family n = a^6 + 16 b^6 with shift
// d = c a^2 + 4 b^2 (c = 2 or 3); valid for every point of the curve.
ArchSeriesConfig family_shift_config(int c, const Int& a, const Int& b,
                                     int terms = 3);

// Window computed on the spot for one curve with n > 0: d is the least
// integer with d^3 >= 4 n, and the window comes from a certified sweep.
ArchSeriesConfig adaptive_series_config(const Int& n, int terms = 3,
                                        mpfr_prec_t prec = 128);

// Evaluate the series.  Every computed z is checked exactly against the
// window, so a mismatched configuration fails loudly instead of silently
// skewing the tail.  The orbit must avoid the two-torsion abscissa for the
// first `terms - 1` doublings (torsion points reaching it need a shorter
// series; the tail interval stays valid because z = 1 once the orbit
// escapes to infinity).
Interval arch_local_height(const MordellCurve& curve, const RationalPoint& P,
                           const ArchSeriesConfig& cfg, mpfr_prec_t prec);

}  // namespace mordell
