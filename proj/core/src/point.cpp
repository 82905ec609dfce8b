// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "mordell/point.hpp"

#include "mordell/errors.hpp"

namespace mordell {

RationalPoint RationalPoint::from_xy(const Rat& x, const Rat& y) {
  const Int& dx = x.get_den();
  if (!is_perfect_square(dx))
    throw DomainError("point: denominator of x is not a square");
  Int delta = isqrt(dx);
  if (y.get_den() != delta * delta * delta)
    throw DomainError("point: denominator of y is not delta^3");
  RationalPoint p;
  p.inf_ = false;
  p.alpha_ = x.get_num();
  p.beta_ = y.get_num();
  p.delta_ = std::move(delta);
  return p;
}

RationalPoint RationalPoint::from_ints(Int alpha, Int beta, Int delta) {
  if (delta <= 0) throw DomainError("point: delta must be positive");
  Int g1, g2;
  mpz_gcd(g1.get_mpz_t(), alpha.get_mpz_t(), delta.get_mpz_t());
  mpz_gcd(g2.get_mpz_t(), beta.get_mpz_t(), delta.get_mpz_t());
  if (g1 != 1 || g2 != 1)
    throw DomainError("point: alpha, beta must be coprime to delta");
  RationalPoint p;
  p.inf_ = false;
  p.alpha_ = std::move(alpha);
  p.beta_ = std::move(beta);
  p.delta_ = std::move(delta);
  return p;
}

Rat RationalPoint::x() const {
  if (inf_) throw DomainError("point: x of infinity");
  return make_rat(alpha_, delta_ * delta_);
}

Rat RationalPoint::y() const {
  if (inf_) throw DomainError("point: y of infinity");
  return make_rat(beta_, delta_ * delta_ * delta_);
}

const Int& RationalPoint::alpha() const {
  if (inf_) throw DomainError("point: alpha of infinity");
  return alpha_;
}

const Int& RationalPoint::beta() const {
  if (inf_) throw DomainError("point: beta of infinity");
  return beta_;
}

const Int& RationalPoint::delta() const {
  if (inf_) throw DomainError("point: delta of infinity");
  return delta_;
}

bool RationalPoint::operator==(const RationalPoint& o) const {
  if (inf_ || o.inf_) return inf_ == o.inf_;
  return alpha_ == o.alpha_ && beta_ == o.beta_ && delta_ == o.delta_;
}

std::string RationalPoint::to_string() const {
  if (inf_) return "infinity";
  return "(" + x().get_str() + ", " + y().get_str() + ")";
}

bool on_curve(const WeierstrassModel& E, const RationalPoint& P) {
  if (P.is_infinity()) return true;
  const Rat x = P.x(), y = P.y();
  Rat lhs = y * y + E.a1() * x * y + E.a3() * y;
  Rat rhs = ((x + E.a2()) * x + E.a4()) * x + E.a6();
  return lhs == rhs;
}

RationalPoint negate(const WeierstrassModel& E, const RationalPoint& P) {
  if (P.is_infinity()) return P;
  const Rat x = P.x();
  return RationalPoint::from_xy(x, -P.y() - E.a1() * x - E.a3());
}

RationalPoint add(const WeierstrassModel& E, const RationalPoint& P,
                  const RationalPoint& Q) {
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  const Rat x1 = P.x(), y1 = P.y(), x2 = Q.x(), y2 = Q.y();
  Rat lambda;
  if (x1 == x2) {
    // Either Q = -P (vertical chord) or P = Q (tangent).
    if (y1 + y2 + E.a1() * x2 + E.a3() == 0) return RationalPoint::infinity();
    lambda = (3 * x1 * x1 + 2 * E.a2() * x1 + E.a4() - E.a1() * y1) /
             (2 * y1 + E.a1() * x1 + E.a3());
  } else {
    lambda = (y2 - y1) / (x2 - x1);
  }
  Rat nu = y1 - lambda * x1;
  Rat x3 = lambda * lambda + E.a1() * lambda - E.a2() - x1 - x2;
  Rat y3 = -(lambda + E.a1()) * x3 - nu - E.a3();
  return RationalPoint::from_xy(x3, y3);
}

RationalPoint sub(const WeierstrassModel& E, const RationalPoint& P,
                  const RationalPoint& Q) {
  return add(E, P, negate(E, Q));
}

RationalPoint scalar_mul(const WeierstrassModel& E, const Int& k,
                         const RationalPoint& P) {
  if (k == 0 || P.is_infinity()) return RationalPoint::infinity();
  Int m = abs(k);
  RationalPoint base = k < 0 ? negate(E, P) : P;
  RationalPoint acc = RationalPoint::infinity();
  // Double-and-add from the most significant bit down.
  for (long i = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2)) - 1;
       i >= 0; --i) {
    acc = add(E, acc, acc);
    if (mpz_tstbit(m.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
      acc = add(E, acc, base);
  }
  return acc;
}

Rat x_after_doubling(const WeierstrassModel& E, const Rat& x) {
  Rat den = ((4 * x + E.b2()) * x + 2 * E.b4()) * x + E.b6();
  if (den == 0) throw DomainError("x_after_doubling: 2-torsion abscissa");
  Rat num = ((x * x - E.b4()) * x - 2 * E.b6()) * x - E.b8();
  return num / den;
}

}  // namespace mordell
