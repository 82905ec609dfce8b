// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <mpfr.h>

#include <string>

#include "mordell/rational.hpp"

namespace mordell {

// Closed interval [lo, hi] of MPFR reals with outward rounding.  Every
// operation returns an interval guaranteed to contain the exact image of
// its operands, so any inequality certified on endpoints is a theorem
// about the enclosed real numbers.  Endpoints share one precision, chosen
// at construction and inherited (as the max) through operations.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

  static Interval exact(const Rat& x, mpfr_prec_t prec);
  static Interval exact(const Int& x, mpfr_prec_t prec);
  static Interval exact(long x, mpfr_prec_t prec);
  static Interval exact_ui(unsigned long x, mpfr_prec_t prec);
  // Encloses the real number denoted by a decimal literal.
  static Interval from_decimal(const std::string& s, mpfr_prec_t prec);
  static Interval hull(const Interval& a, const Interval& b);
  static Interval pi(mpfr_prec_t prec);

  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  // Endpoints as exact rationals (every finite MPFR value is dyadic).
  Rat lo_rat() const;
  Rat hi_rat() const;

  bool is_positive() const { return mpfr_sgn(lo_) > 0; }
  bool is_negative() const { return mpfr_sgn(hi_) < 0; }
  bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
  bool contains(const Rat& x) const;
  bool contains(const Interval& o) const;  // o subset of *this
  bool overlaps(const Interval& o) const;
  // Strict comparisons that are certain despite the rounding.
  bool certainly_less(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
  bool certainly_less(const Rat& c) const;
  bool certainly_greater(const Rat& c) const;
  // Non-strict one-sided bounds (exact endpoint-vs-rational comparisons).
  bool at_least(const Rat& c) const;  // lo >= c
  bool at_most(const Rat& c) const;   // hi <= c

  double width_double() const;
  std::string lo_string(size_t digits = 25) const;  // rounded down
  std::string hi_string(size_t digits = 25) const;  // rounded up
  std::string to_string(size_t digits = 25) const;  // "[lo, hi]"
  // Midpoint as a plain double; for reporting only, no certification.
  double mid_double() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  Interval& operator+=(const Interval& o);

  friend Interval abs_iv(const Interval& a);
  friend Interval sqrt_iv(const Interval& a);   // requires lo >= 0
  friend Interval log_iv(const Interval& a);    // requires lo > 0
  friend Interval exp_iv(const Interval& a);
  friend Interval pow_ui(const Interval& a, unsigned long e);
  friend Interval rootn_ui(const Interval& a, unsigned long n);  // a >= 0
  friend Interval agm_iv(const Interval& a, const Interval& b);  // a, b > 0
  // Exact scaling by a rational.
  friend Interval mul_rat(const Interval& a, const Rat& c);
  friend Interval add_rat(const Interval& a, const Rat& c);

 private:
  mpfr_t lo_, hi_;
};

// log of an exact positive rational, outward rounded.
Interval log_rat(const Rat& x, mpfr_prec_t prec);
Interval log_int(const Int& x, mpfr_prec_t prec);

}  // namespace mordell
