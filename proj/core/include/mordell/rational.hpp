// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <gmpxx.h>

#include <string>

#include "mordell/errors.hpp"

namespace mordell {

// Exact arbitrary-precision integers and rationals.  GMP's C++ classes keep
// rationals canonical (gcd(num, den) = 1, den > 0) as long as they are built
// through make_rat / arithmetic; raw mpq_class(num, den) does NOT reduce.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat parse_rat(const std::string& s) {
  mpq_class r;
  if (r.set_str(s, 10) != 0) throw DomainError("parse_rat: cannot parse '" + s + "'");
  r.canonicalize();
  return r;
}

// Exact value of a plain decimal literal such as "-0.147152" or "120.531634".
// No exponent form; the point and fractional digits are optional.
inline Rat parse_decimal(const std::string& s) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
  std::string digits;
  size_t frac = 0;
  bool seen_point = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '.') {
      if (seen_point) throw DomainError("parse_decimal: cannot parse '" + s + "'");
      seen_point = true;
    } else if (s[i] >= '0' && s[i] <= '9') {
      digits += s[i];
      seen_digit = true;
      if (seen_point) ++frac;
    } else {
      throw DomainError("parse_decimal: cannot parse '" + s + "'");
    }
  }
  if (!seen_digit) throw DomainError("parse_decimal: cannot parse '" + s + "'");
  Int num(digits, 10);
  if (neg) num = -num;
  Int den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// v_p(x) for x != 0.  Callers must handle x = 0 themselves (v_p(0) = +inf).
inline long valuation(const Int& x, const Int& p) {
  if (x == 0) throw DomainError("valuation: v_p(0) is infinite");
  Int rest;
  return static_cast<long>(
      mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

// Valuation extended with +infinity so that vanishing arguments stay
// representable (used by the local-height case analysis).
struct ExtVal {
  bool infinite = false;
  long v = 0;

  static ExtVal inf() { return {true, 0}; }
  static ExtVal of(long value) { return {false, value}; }

  bool operator<=(long c) const { return !infinite && v <= c; }
  bool operator>(long c) const { return infinite || v > c; }
  friend bool operator>=(const ExtVal& a, const ExtVal& b) {
    if (a.infinite) return true;
    if (b.infinite) return false;
    return a.v >= b.v;
  }
};

inline ExtVal valuation_ext(const Int& x, const Int& p) {
  if (x == 0) return ExtVal::inf();
  return ExtVal::of(valuation(x, p));
}

inline bool is_perfect_square(const Int& x) {
  return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

inline Int isqrt(const Int& x) {
  if (x < 0) throw DomainError("isqrt: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

// Exact square root of a rational if it is a perfect square.
inline bool rat_sqrt_exact(const Rat& x, Rat* root) {
  if (x < 0) return false;
  const Int num = x.get_num(), den = x.get_den();
  if (!is_perfect_square(num) || !is_perfect_square(den)) return false;
  *root = make_rat(isqrt(num), isqrt(den));
  return true;
}

// Nonnegative remainder of a mod m (m > 0).
inline Int mod_nonneg(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// max(|num|, den) as the classical multiplicative height of a rational.
inline Int height_num(const Rat& x) {
  Int a = abs(x.get_num());
  const Int& d = x.get_den();
  return a > d ? a : d;
}

}  // namespace mordell
