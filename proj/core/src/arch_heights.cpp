// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "mordell/arch_heights.hpp"

#include "mordell/constants.hpp"
#include "mordell/errors.hpp"
#include "mordell/zwindow.hpp"

namespace mordell {

PeriodData period_data(mpfr_prec_t prec) {
  PeriodData pd;
  const Interval one = Interval::exact(1L, prec);
  const Interval three = Interval::exact(3L, prec);
  const Interval root3_twice = mul_rat(sqrt_iv(three), Rat(2));
  const Interval a0 = mul_rat(rootn_ui(three, 4), Rat(2));  // 2 * 3^{1/4}
  pd.agm_main = agm_iv(a0, sqrt_iv(add_rat(root3_twice, Rat(-3))));
  pd.agm_twist = agm_iv(a0, sqrt_iv(add_rat(root3_twice, Rat(3))));
  const Interval two_pi = mul_rat(Interval::pi(prec), Rat(2));
  pd.real_period = two_pi / pd.agm_main;
  pd.period_ratio = pd.agm_main / mul_rat(pd.agm_twist, Rat(2));
  pd.nome_mag = exp_iv(-(two_pi * pd.period_ratio));
  const Interval& q = pd.nome_mag;
  pd.theta_gap = one + q + pow_ui(q, 3) + pow_ui(q, 6) +
                 pow_ui(q, 10) / (one - pow_ui(q, 5));
  pd.point_offset =
      mul_rat(log_iv(Interval::exact(Int(432), prec) / q), make_rat(1, 16)) -
      mul_rat(log_iv(pd.agm_main), make_rat(1, 4)) -
      mul_rat(log_iv(pd.theta_gap), make_rat(1, 2));
  pd.uniform_offset = pd.point_offset - mul_rat(log_int(2, prec), make_rat(2, 3));
  return pd;
}

Interval arch_height_floor(const MordellCurve& curve, const RationalPoint& P,
                           mpfr_prec_t prec) {
  if (curve.n() <= 0)
    throw DomainError("arch_height_floor: requires n > 0");
  if (P.is_infinity())
    throw DomainError("arch_height_floor: undefined at infinity");
  if (P.beta() == 0)
    throw DomainError("arch_height_floor: undefined for y = 0");
  const Rat ratio = make_rat(abs(P.beta()), pow_int(P.delta(), 3));
  return mul_rat(log_int(curve.n(), prec), make_rat(1, 12)) +
         mul_rat(log_rat(ratio, prec), make_rat(1, 2)) +
         period_data(prec).point_offset;
}

Interval canonical_height_floor(const MordellCurve& curve, mpfr_prec_t prec) {
  if (curve.n() <= 0)
    throw DomainError("canonical_height_floor: requires n > 0");
  switch (curve.n_squarefree()) {
    case Tri::Yes:
      break;
    case Tri::No:
      throw DomainError("canonical_height_floor: requires squarefree n");
    case Tri::Unknown:
      throw BudgetError(
          "canonical_height_floor: could not certify n squarefree");
  }
  return mul_rat(log_int(curve.n(), prec), make_rat(1, 12)) +
         period_data(prec).uniform_offset;
}

ArchSeriesConfig family_shift_config(int c, const Int& a, const Int& b,
                                     int terms) {
  if (c != 2 && c != 3)
    throw DomainError("family_shift_config: shift coefficient must be 2 or 3");
  if (a <= 0 || b <= 0)
    throw DomainError("family_shift_config: parameters must be positive");
  if (terms < 1) throw DomainError("family_shift_config: need terms >= 1");
  ArchSeriesConfig cfg;
  cfg.n = pow_int(a, 6) + 16 * pow_int(b, 6);
  cfg.d = c * a * a + 4 * b * b;
  cfg.terms = terms;
  cfg.z_lo = consts::shift_z_lo(c);
  cfg.z_hi = consts::shift_z_hi(c);
  return cfg;
}

ArchSeriesConfig adaptive_series_config(const Int& n, int terms,
                                        mpfr_prec_t prec) {
  if (n <= 0) throw DomainError("adaptive_series_config: requires n > 0");
  if (terms < 1) throw DomainError("adaptive_series_config: need terms >= 1");
  // Smallest d with d^3 >= 4n pins k = n/d^3 into (0.1, 0.25], where the
  // multiplier window stays comfortably positive.
  const Int four_n = 4 * n;
  Int d;
  const int exact_root = mpz_root(d.get_mpz_t(), four_n.get_mpz_t(), 3);
  if (exact_root == 0) d += 1;
  const Rat k = make_rat(n, pow_int(d, 3));
  auto [z_lo, z_hi] = certified_z_range(k, prec, 1e-4);
  if (z_lo <= 0)
    throw PrecisionError(
        "adaptive_series_config: could not certify a positive window");
  ArchSeriesConfig cfg;
  cfg.n = n;
  cfg.d = d;
  cfg.terms = terms;
  cfg.z_lo = z_lo;
  cfg.z_hi = z_hi;
  return cfg;
}

Interval arch_local_height(const MordellCurve& curve, const RationalPoint& P,
                           const ArchSeriesConfig& cfg, mpfr_prec_t prec) {
  if (P.is_infinity())
    throw DomainError("arch_local_height: undefined at infinity");
  if (curve.n() != cfg.n)
    throw DomainError("arch_local_height: window certified for a different curve");
  if (cfg.terms < 1 || cfg.z_lo <= 0 || cfg.z_hi < cfg.z_lo)
    throw DomainError("arch_local_height: malformed series configuration");
  if (!on_curve(curve.model(), P))
    throw DomainError("arch_local_height: point is not on the curve");
  const Int& n = curve.n();
  const Int& d = cfg.d;
  Rat x = P.x();
  const Rat x_shift = x + d;
  if (x_shift <= 0)
    throw DomainError("arch_local_height: point left of the shifted origin");
  Interval acc = log_rat(x_shift, prec);
  Rat coeff = make_rat(1, 4);
  for (int j = 0; j < cfg.terms; ++j) {
    const Rat s = x + d;
    const Rat num = x * x * x * (x + 4 * d) - 8 * n * x + 4 * d * n;
    const Rat den = s * s * s * s;
    const Rat z = num / den;
    if (z < cfg.z_lo || z > cfg.z_hi)
      throw DomainError(
          "arch_local_height: multiplier escapes the certified window");
    acc += mul_rat(log_rat(z, prec), coeff);
    coeff /= 4;
    if (j + 1 < cfg.terms) x = x_after_doubling(curve.model(), x);
  }
  // All later terms carry z inside the window, so they sum into
  // 4^{-terms} / 3 * [log z_lo, log z_hi].
  const Rat tail_coeff = make_rat(1, 3 * pow_int(4, cfg.terms));
  acc += mul_rat(Interval::hull(log_rat(cfg.z_lo, prec), log_rat(cfg.z_hi, prec)),
                 tail_coeff);
  return acc;
}

}  // namespace mordell
