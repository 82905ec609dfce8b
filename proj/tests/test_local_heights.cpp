// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include <vector>

#include "doctest.h"
#include "mordell/errors.hpp"
#include "mordell/exact_log.hpp"
#include "mordell/local_heights.hpp"
#include "mordell/point.hpp"
#include "mordell/weierstrass.hpp"

using namespace mordell;

namespace {

const Int kN("27289");

RationalPoint p1() { return RationalPoint::from_xy(Rat(-25), Rat(108)); }
RationalPoint p2() { return RationalPoint::from_xy(Rat(30), Rat(233)); }
RationalPoint p3() { return RationalPoint::from_xy(Rat(-30), Rat(17)); }

}  // namespace

TEST_CASE("log combinations merge, cancel, scale, and print") {
  LogCombination c;
  CHECK(c.is_zero());
  CHECK(c.to_string() == "0");
  c.add_term(2, make_rat(1, 3));
  c.add_term(2, make_rat(2, 3));
  c.add_term(5, Rat(-2));
  CHECK(c.terms().at(2) == 1);
  CHECK(c.to_string() == "log(2) - 2*log(5)");
  c.add_term(5, Rat(2));
  CHECK(c.terms().count(5) == 0);

  LogCombination d = LogCombination::single(3, make_rat(-1, 2));
  CHECK(d.to_string() == "-1/2*log(3)");
  LogCombination s = c + d;
  CHECK(s.terms().size() == 2);
  CHECK(s.scaled(Rat(0)).is_zero());
  CHECK(s.scaled(Rat(-2)).terms().at(3) == 1);

  CHECK_THROWS_AS(c.add_term(1, Rat(1)), DomainError);
}

TEST_CASE("log combinations evaluate to certified enclosures") {
  // 2*log(2) - log(4) is exactly zero; the enclosure must be a tight
  // interval around it.
  LogCombination c;
  c.add_term(2, Rat(2));
  c.add_term(4, Rat(-1));
  Interval v = c.evaluate(128);
  CHECK(v.contains_zero());
  CHECK(v.width_double() < 1e-30);

  LogCombination l5 = LogCombination::single(5, Rat(1));
  CHECK(l5.evaluate(128).certainly_greater(make_rat(16094, 10000)));
  CHECK(l5.evaluate(128).certainly_less(make_rat(16095, 10000)));
}

TEST_CASE("local height fractions at small primes for the standard points") {
  MordellCurve C(kN);
  CHECK(local_height_coeff(C, p1(), 2) == 0);
  CHECK(local_height_coeff(C, p1(), 3) == make_rat(-1, 2));
  CHECK(local_height_coeff(C, p1(), 5) == 0);  // 5 | alpha but 5 coprime to beta
  CHECK(local_height_coeff(C, p1(), 7) == 0);
  CHECK(local_height_coeff(C, p2(), 2) == make_rat(-2, 3));
  CHECK(local_height_coeff(C, p2(), 3) == 0);
  CHECK(local_height_coeff(C, p3(), 2) == make_rat(-2, 3));
  CHECK(local_height_coeff(C, p3(), 3) == 0);

  RationalPoint d2 = add(C.model(), p2(), p2());
  CHECK(local_height_coeff(C, d2, 233) == 2);  // delta = 233
  CHECK(local_height_coeff(C, d2, 2) == make_rat(-2, 3));
  CHECK(local_height_coeff(C, d2, 3) == 0);

  CHECK_THROWS_AS(local_height_coeff(C, RationalPoint::infinity(), 2),
                  DomainError);
  CHECK_THROWS_AS(local_height_coeff(C, p1(), 4), DomainError);
}

TEST_CASE("valuation case split matches the closed divisibility rules") {
  // For odd n: fraction at 2 is -2/3 iff 2 | alpha, else 2*v2(delta).
  // For n coprime to 3: fraction at 3 is -1/2 iff 3 | beta, else 2*v3(delta).
  // For p >= 5 and squarefree n: always 2*vp(delta).
  MordellCurve C(kN);
  const WeierstrassModel& E = C.model();
  std::vector<RationalPoint> pts = {
      p1(), p2(), p3(), add(E, p1(), p2()), add(E, p2(), p2()),
      add(E, add(E, p1(), p2()), p3()), sub(E, p1(), p3()),
      scalar_mul(E, 3, p1())};
  for (const auto& P : pts) {
    CAPTURE(P.to_string());
    const bool a2 = P.alpha() % 2 == 0;
    const bool b3 = P.beta() % 3 == 0;
    Rat want2 = a2 ? make_rat(-2, 3) : Rat(2 * valuation(P.delta(), 2));
    Rat want3 = b3 ? make_rat(-1, 2) : Rat(2 * valuation(P.delta(), 3));
    CHECK(local_height_coeff(C, P, 2) == want2);
    CHECK(local_height_coeff(C, P, 3) == want3);
    for (long p : {5L, 7L, 11L, 13L, 233L})
      CHECK(local_height_coeff(C, P, p) == 2 * valuation(P.delta(), p));
  }
}

TEST_CASE("finite height closed forms on the standard points") {
  MordellCurve C(kN);
  CHECK(finite_height(C, p1()) == LogCombination::single(3, make_rat(-1, 2)));
  CHECK(finite_height(C, p2()) == LogCombination::single(2, make_rat(-2, 3)));
  CHECK(finite_height(C, p3()) == LogCombination::single(2, make_rat(-2, 3)));

  RationalPoint d2 = add(C.model(), p2(), p2());
  LogCombination expect = LogCombination::single(233, Rat(2));
  expect.add_term(2, make_rat(-2, 3));
  CHECK(finite_height(C, d2) == expect);

  CHECK(finite_height(C, RationalPoint::infinity()).is_zero());
}

TEST_CASE("finite height sums the per-prime fractions") {
  MordellCurve C(kN);
  const WeierstrassModel& E = C.model();
  std::vector<RationalPoint> pts = {p1(),
                                    p2(),
                                    add(E, p1(), p2()),
                                    add(E, p2(), p3()),
                                    scalar_mul(E, 2, p1()),
                                    scalar_mul(E, 3, p2()),
                                    add(E, add(E, p1(), p2()), p3())};
  for (const auto& P : pts) {
    CAPTURE(P.to_string());
    LogCombination total = finite_height(C, P);
    // Rebuild from scratch: 2 vp(delta) at every prime of delta, plus the
    // corrections at 2 and 3.
    LogCombination rebuilt;
    Factorization fd = factorize(P.delta());
    REQUIRE(fd.complete());
    for (const auto& [p, e] : fd.primes) rebuilt.add_term(p, Rat(2 * e));
    rebuilt.add_term(2, local_height_coeff(C, P, 2) -
                            2 * valuation(P.delta(), 2));
    rebuilt.add_term(3, local_height_coeff(C, P, 3) -
                            2 * valuation(P.delta(), 3));
    Interval a = total.evaluate(160);
    Interval b = rebuilt.evaluate(160);
    CHECK(a.overlaps(b));
    CHECK((a - b).contains_zero());
    CHECK((a - b).width_double() < 1e-40);
  }
}

TEST_CASE("finite height on torsion points of auxiliary curves") {
  // 2-torsion (2, 0) on y^2 = x^3 - 8
  MordellCurve C8(Int(-8));
  RationalPoint t2 = RationalPoint::from_xy(Rat(2), Rat(0));
  CHECK(local_height_coeff(C8, t2, 2) == -1);
  CHECK(local_height_coeff(C8, t2, 3) == make_rat(-1, 2));
  LogCombination h2 = finite_height(C8, t2);
  LogCombination expect2 = LogCombination::single(2, Rat(-1));
  expect2.add_term(3, make_rat(-1, 2));
  CHECK(h2 == expect2);

  // order-6 point (2, 3) on y^2 = x^3 + 1
  MordellCurve C1(Int(1));
  RationalPoint g = RationalPoint::from_xy(Rat(2), Rat(3));
  LogCombination h1 = finite_height(C1, g);
  LogCombination expect1 = LogCombination::single(2, make_rat(-2, 3));
  expect1.add_term(3, make_rat(-1, 2));
  CHECK(h1 == expect1);

  // 3-torsion (0, 3) on y^2 = x^3 + 9: alpha = 0 counts as even
  MordellCurve C9(Int(9));
  RationalPoint t3 = RationalPoint::from_xy(Rat(0), Rat(3));
  CHECK(local_height_coeff(C9, t3, 2) == make_rat(-2, 3));
}

TEST_CASE("non-minimal models are rejected") {
  MordellCurve C16(Int(16));
  RationalPoint P = RationalPoint::from_xy(Rat(0), Rat(4));
  CHECK_THROWS_AS(local_height_coeff(C16, P, 2), DomainError);
  CHECK_THROWS_AS(finite_height(C16, P), DomainError);
  // still fine at a prime where the model is minimal
  CHECK(local_height_coeff(C16, P, 5) == 0);

  MordellCurve C64(Int(64));
  RationalPoint Q = RationalPoint::from_xy(Rat(0), Rat(8));
  CHECK_THROWS_AS(local_height_coeff(C64, Q, 2), DomainError);
  CHECK_THROWS_AS(finite_height(C64, Q), DomainError);
}

TEST_CASE("points off the curve are rejected by the finite height") {
  MordellCurve C(kN);
  RationalPoint bogus = RationalPoint::from_xy(Rat(1), Rat(1));
  CHECK_THROWS_AS(finite_height(C, bogus), DomainError);
}
