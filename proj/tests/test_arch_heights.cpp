// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include <initializer_list>

#include "doctest.h"
#include "mordell/arch_heights.hpp"
#include "mordell/constants.hpp"
#include "mordell/errors.hpp"
#include "mordell/local_heights.hpp"
#include "mordell/zwindow.hpp"

using namespace mordell;

TEST_CASE("period data encloses the lattice constants") {
  const PeriodData pd = period_data(192);
  CHECK(pd.real_period.certainly_greater(parse_decimal("4.206546315")));
  CHECK(pd.real_period.certainly_less(parse_decimal("4.206546317")));
  // the AGM ratio collapses to 1/(2 sqrt 3)
  const Interval ratio_ref =
      Interval::exact(1L, 192) /
      mul_rat(sqrt_iv(Interval::exact(3L, 192)), Rat(2));
  CHECK(pd.period_ratio.overlaps(ratio_ref));
  CHECK(pd.nome_mag.certainly_greater(parse_decimal("0.16303353")));
  CHECK(pd.nome_mag.certainly_less(parse_decimal("0.16303354")));
  CHECK(pd.theta_gap.certainly_greater(parse_decimal("1.167385747")));
  CHECK(pd.theta_gap.certainly_less(parse_decimal("1.167385748")));
  CHECK(pd.point_offset.certainly_greater(parse_decimal("0.3149468602")));
  CHECK(pd.point_offset.certainly_less(parse_decimal("0.3149468603")));
  CHECK(pd.uniform_offset.certainly_greater(parse_decimal("-0.14715127")));
  CHECK(pd.uniform_offset.certainly_less(parse_decimal("-0.14715125")));
  // the frozen decimals sit strictly on the safe side of the live values
  CHECK(pd.point_offset.certainly_greater(consts::arch_point_offset()));
  CHECK(pd.uniform_offset.certainly_greater(consts::arch_uniform_offset()));
}

TEST_CASE("single-curve multiplier windows") {
  const auto [lo8, hi8] = certified_z_range(make_rat(1, 8), 128, 1e-4);
  CHECK(lo8 > parse_decimal("0.0991"));
  CHECK(lo8 < parse_decimal("0.09923"));
  CHECK(hi8 >= 9);  // the exact supremum, reached at the edge of the domain
  CHECK(hi8 < parse_decimal("9.0002"));

  const auto [lo4, hi4] = certified_z_range(make_rat(1, 4), 128, 1e-4);
  CHECK(lo4 > parse_decimal("0.1110"));
  CHECK(lo4 <= make_rat(1, 9));  // the exact interior minimum
  CHECK(hi4 > parse_decimal("75.5968"));
  CHECK(hi4 < parse_decimal("75.598"));
}

TEST_CASE("family parameter sweep") {
  const auto [klo2, khi2] = family_k_range(2, 128, 1e-7);
  CHECK(klo2 > parse_decimal("0.0428930"));
  CHECK(klo2 < parse_decimal("0.04289322"));  // true infimum 1/(12 + 8 sqrt 2)
  CHECK(khi2 >= make_rat(1, 4));
  CHECK(khi2 < parse_decimal("0.2500002"));

  const auto [klo3, khi3] = family_k_range(3, 128, 1e-7);
  CHECK(klo3 > parse_decimal("0.0193105"));
  CHECK(klo3 < parse_decimal("0.01931076"));  // true infimum 1/(31 + 12 sqrt 3)
  CHECK(khi3 >= make_rat(1, 4));
  CHECK(khi3 < parse_decimal("0.2500002"));
}

TEST_CASE("frozen family windows recertify") {
  for (int c : {2, 3}) {
    CAPTURE(c);
    SweepStats stats;
    CHECK(verify_family_z_window(c, consts::shift_z_lo(c), consts::shift_z_hi(c),
                                 128, &stats));
    CHECK(stats.boxes > 100);
    CHECK(stats.max_depth >= 15);
  }
  // tighter demands must fail: the true extrema sit just outside these
  SweepStats s1;
  CHECK_FALSE(verify_family_z_window(2, parse_decimal("0.0624"),
                                     consts::shift_z_hi(2), 128, &s1));
  SweepStats s2;
  CHECK_FALSE(verify_family_z_window(2, consts::shift_z_lo(2),
                                     parse_decimal("20"), 128, &s2));
}

TEST_CASE("series configurations validate their input") {
  CHECK_THROWS_AS(family_shift_config(4, 5, 3), DomainError);
  CHECK_THROWS_AS(family_shift_config(2, 0, 3), DomainError);
  CHECK_THROWS_AS(family_shift_config(2, 5, 3, 0), DomainError);
  CHECK_THROWS_AS(adaptive_series_config(0), DomainError);
  CHECK_THROWS_AS(adaptive_series_config(-8), DomainError);

  const ArchSeriesConfig cfg2 = family_shift_config(2, 5, 3);
  CHECK(cfg2.n == 27289);
  CHECK(cfg2.d == 86);
  CHECK(family_shift_config(3, 5, 3).d == 111);

  const ArchSeriesConfig ada = adaptive_series_config(27289);
  CHECK(ada.d == 48);  // least d with d^3 >= 4n
  CHECK(ada.z_lo > parse_decimal("0.111"));
  CHECK(ada.z_lo < parse_decimal("0.11111"));
  CHECK(ada.z_hi > parse_decimal("72.131"));
  CHECK(ada.z_hi < parse_decimal("72.133"));
}

TEST_CASE("torsion orbits make the series exact") {
  const MordellCurve e1{Int(1)};
  const ArchSeriesConfig cfg = adaptive_series_config(1, 6);
  const auto p23 = RationalPoint::from_ints(2, 3, 1);
  const Interval lam = arch_local_height(e1, p23, cfg, 192);
  // canonical heights of torsion points vanish, so the archimedean part
  // must cancel the finite one exactly: here (2/3) log 2 + (1/2) log 3.
  const Interval target = mul_rat(log_int(2, 192), make_rat(2, 3)) +
                          mul_rat(log_int(3, 192), make_rat(1, 2));
  CHECK(lam.contains(target));

  const Interval lam0 =
      arch_local_height(e1, RationalPoint::from_ints(0, 1, 1), cfg, 192);
  CHECK(lam0.contains(mul_rat(log_int(2, 192), make_rat(2, 3))));

  // two-torsion: one exact term, then the orbit escapes to infinity where
  // the multiplier is 1, so the tail interval still covers the truth
  const ArchSeriesConfig cfg1 = adaptive_series_config(1, 1);
  const Interval lam2t =
      arch_local_height(e1, RationalPoint::from_ints(-1, 0, 1), cfg1, 192);
  CHECK(lam2t.contains(mul_rat(log_int(3, 192), make_rat(1, 2))));
  // more terms would double past the vanishing denominator
  CHECK_THROWS_AS(arch_local_height(e1, RationalPoint::from_ints(-1, 0, 1), cfg, 192),
                  DomainError);

  // finite + archimedean = 0 end to end
  const Interval total = finite_height(e1, p23).evaluate(192) + lam;
  CHECK(total.contains(Rat(0)));
  CHECK(total.width_double() < 1e-3);
}

TEST_CASE("family heights at the base example") {
  const MordellCurve curve{Int(27289)};
  const auto p1 = RationalPoint::from_ints(-25, 108, 1);
  const auto p2 = RationalPoint::from_ints(30, 233, 1);
  const auto p3 = RationalPoint::from_ints(-30, 17, 1);
  const ArchSeriesConfig c2 = family_shift_config(2, 5, 3, 6);
  const ArchSeriesConfig c3 = family_shift_config(3, 5, 3, 6);

  const Interval lam1 = arch_local_height(curve, p1, c3, 192);
  const Interval lam2 = arch_local_height(curve, p2, c2, 192);
  const Interval lam3 = arch_local_height(curve, p3, c2, 192);
  CHECK(lam1.contains(parse_decimal("3.93273603")));
  CHECK(lam2.contains(parse_decimal("4.05674291")));
  CHECK(lam3.contains(parse_decimal("3.95359802")));
  CHECK(lam2.width_double() < 1.5e-3);

  // the window covers every real point, so any shift must agree
  CHECK(lam2.overlaps(arch_local_height(curve, p2, c3, 192)));
  CHECK(lam2.overlaps(
      arch_local_height(curve, p2, adaptive_series_config(27289, 6), 192)));

  const Interval h1 = finite_height(curve, p1).evaluate(192) + lam1;
  const Interval h2 = finite_height(curve, p2).evaluate(192) + lam2;
  const Interval h3 = finite_height(curve, p3).evaluate(192) + lam3;
  CHECK(h1.contains(parse_decimal("3.3834298824")));
  CHECK(h2.contains(parse_decimal("3.5946447945")));
  CHECK(h3.contains(parse_decimal("3.4914998963")));

  const Interval third_log_m = mul_rat(log_int(27289, 192), make_rat(1, 3));
  int idx = 1;
  for (const Interval* h : {&h1, &h2, &h3}) {
    const auto win = consts::family_height_window(idx++);
    const Interval gap = *h - third_log_m;
    CHECK(gap.certainly_greater(win.lo));
    CHECK(gap.certainly_less(win.hi));
  }
}

TEST_CASE("archimedean and curve-level floors") {
  const MordellCurve curve{Int(27289)};
  const auto p2 = RationalPoint::from_ints(30, 233, 1);
  const Interval floor2 = arch_height_floor(curve, p2, 192);
  CHECK(floor2.certainly_greater(parse_decimal("3.89165")));
  CHECK(floor2.certainly_less(parse_decimal("3.89166")));
  const ArchSeriesConfig c2 = family_shift_config(2, 5, 3, 6);
  CHECK(floor2.certainly_less(arch_local_height(curve, p2, c2, 192)));

  const Interval cf = canonical_height_floor(curve, 192);
  CHECK(cf.certainly_greater(parse_decimal("0.704035")));
  CHECK(cf.certainly_less(parse_decimal("0.704036")));

  CHECK_THROWS_AS(arch_height_floor(curve, RationalPoint::infinity(), 192),
                  DomainError);
  const MordellCurve e1{Int(1)};
  CHECK_THROWS_AS(arch_height_floor(e1, RationalPoint::from_ints(-1, 0, 1), 192),
                  DomainError);
  CHECK_THROWS_AS(canonical_height_floor(MordellCurve{Int(-8)}, 192), DomainError);
  CHECK_THROWS_AS(canonical_height_floor(MordellCurve{Int(16)}, 192), DomainError);
}

TEST_CASE("series rejects mismatched input") {
  const MordellCurve curve{Int(27289)};
  const auto p2 = RationalPoint::from_ints(30, 233, 1);
  CHECK_THROWS_AS(arch_local_height(curve, p2, adaptive_series_config(1, 3), 128),
                  DomainError);
  const ArchSeriesConfig cfg = family_shift_config(2, 5, 3);
  CHECK_THROWS_AS(arch_local_height(curve, RationalPoint::from_ints(3, 7, 1), cfg, 128),
                  DomainError);
  CHECK_THROWS_AS(arch_local_height(curve, RationalPoint::infinity(), cfg, 128),
                  DomainError);
  // a window that lies about its range is caught at the first term
  ArchSeriesConfig bad = cfg;
  bad.z_lo = parse_decimal("1.01");
  bad.z_hi = parse_decimal("1.02");
  CHECK_THROWS_AS(arch_local_height(curve, p2, bad, 128), DomainError);
}
