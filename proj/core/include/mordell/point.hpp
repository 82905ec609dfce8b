// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <string>

#include "mordell/rational.hpp"
#include "mordell/weierstrass.hpp"

namespace mordell {

// Affine rational point stored in lowest terms x = alpha/delta^2,
// y = beta/delta^3 with delta >= 1 and gcd(alpha, delta) = gcd(beta, delta)
// = 1, or the point at infinity.  Points on integral Weierstrass models
// always have denominators of this shape, and the local-height and descent
// layers read alpha, beta, delta directly.
class RationalPoint {
 public:
  RationalPoint() = default;  // the point at infinity

  static RationalPoint infinity() { return {}; }
  // Validates that (x, y) has the (alpha, beta, delta) denominator shape.
  static RationalPoint from_xy(const Rat& x, const Rat& y);
  static RationalPoint from_ints(Int alpha, Int beta, Int delta);

  bool is_infinity() const { return inf_; }
  Rat x() const;
  Rat y() const;
  const Int& alpha() const;
  const Int& beta() const;
  const Int& delta() const;

  bool operator==(const RationalPoint& o) const;
  std::string to_string() const;

 private:
  bool inf_ = true;
  Int alpha_, beta_, delta_;
};

bool on_curve(const WeierstrassModel& E, const RationalPoint& P);

RationalPoint negate(const WeierstrassModel& E, const RationalPoint& P);
RationalPoint add(const WeierstrassModel& E, const RationalPoint& P,
                  const RationalPoint& Q);
RationalPoint sub(const WeierstrassModel& E, const RationalPoint& P,
                  const RationalPoint& Q);
RationalPoint scalar_mul(const WeierstrassModel& E, const Int& k,
                         const RationalPoint& P);

// Abscissa of 2P from the abscissa of P.  Throws DomainError when the
// denominator vanishes, i.e. at a 2-torsion abscissa.
Rat x_after_doubling(const WeierstrassModel& E, const Rat& x);

}  // namespace mordell
