// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "mordell/interval.hpp"

#include <algorithm>
#include <cstdio>

#include "mordell/errors.hpp"

namespace mordell {

namespace {
void check_valid(const mpfr_t lo, const mpfr_t hi) {
  if (mpfr_nan_p(lo) || mpfr_nan_p(hi) || mpfr_cmp(lo, hi) > 0)
    throw PrecisionError("interval: invalid endpoints");
}
}  // namespace

Interval::Interval(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) {
  mpfr_init2(lo_, o.prec());
  mpfr_init2(hi_, o.prec());
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept {
  mpfr_init2(lo_, o.prec());
  mpfr_init2(hi_, o.prec());
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec());
    mpfr_set_prec(hi_, o.prec());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::exact(const Rat& x, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, x.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::exact(const Int& x, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, x.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, x.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::exact(long x, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, x, MPFR_RNDD);
  mpfr_set_si(r.hi_, x, MPFR_RNDU);
  return r;
}

Interval Interval::exact_ui(unsigned long x, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_ui(r.lo_, x, MPFR_RNDD);
  mpfr_set_ui(r.hi_, x, MPFR_RNDU);
  return r;
}

Interval Interval::from_decimal(const std::string& s, mpfr_prec_t prec) {
  Interval r(prec);
  if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0)
    throw DomainError("from_decimal: cannot parse '" + s + "'");
  mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU);
  check_valid(r.lo_, r.hi_);
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec(), b.prec()));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

bool Interval::contains(const Rat& x) const {
  return mpfr_cmp_q(lo_, x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, x.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& o) const {
  return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
}

bool Interval::overlaps(const Interval& o) const {
  return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
}

bool Interval::certainly_less(const Rat& c) const {
  return mpfr_cmp_q(hi_, c.get_mpq_t()) < 0;
}

bool Interval::certainly_greater(const Rat& c) const {
  return mpfr_cmp_q(lo_, c.get_mpq_t()) > 0;
}

bool Interval::at_least(const Rat& c) const {
  return mpfr_cmp_q(lo_, c.get_mpq_t()) >= 0;
}

bool Interval::at_most(const Rat& c) const {
  return mpfr_cmp_q(hi_, c.get_mpq_t()) <= 0;
}

namespace {
Rat mpfr_to_rat(const mpfr_t x) {
  if (!mpfr_number_p(x)) throw PrecisionError("Interval: endpoint is not finite");
  if (mpfr_zero_p(x)) return Rat(0);
  Int mant;
  const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  Rat r(mant);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}
}  // namespace

Rat Interval::lo_rat() const { return mpfr_to_rat(lo_); }
Rat Interval::hi_rat() const { return mpfr_to_rat(hi_); }

double Interval::width_double() const {
  mpfr_t w;
  mpfr_init2(w, prec());
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

double Interval::mid_double() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

namespace {
std::string fmt_endpoint(const mpfr_t x, size_t digits, mpfr_rnd_t rnd) {
  char* s = nullptr;
  // %R*e consumes the rounding mode argument, then the mpfr_t.
  if (mpfr_asprintf(&s, "%.*R*e", static_cast<int>(digits), rnd, x) < 0)
    throw Error("mpfr_asprintf failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}
}  // namespace

std::string Interval::lo_string(size_t digits) const {
  return fmt_endpoint(lo_, digits, MPFR_RNDD);
}

std::string Interval::hi_string(size_t digits) const {
  return fmt_endpoint(hi_, digits, MPFR_RNDU);
}

std::string Interval::to_string(size_t digits) const {
  return "[" + lo_string(digits) + ", " + hi_string(digits) + "]";
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec(), b.prec()));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec(), b.prec()));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  // min/max over the four endpoint products, each rounded outward.
  Interval r(std::max(a.prec(), b.prec()));
  mpfr_t t;
  mpfr_init2(t, r.prec());
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : as)
    for (auto y : bs) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw PrecisionError("interval division by enclosure of 0");
  Interval r(std::max(a.prec(), b.prec()));
  mpfr_t t;
  mpfr_init2(t, r.prec());
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : as)
    for (auto y : bs) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r(a.prec());
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Interval& Interval::operator+=(const Interval& o) {
  *this = *this + o;
  return *this;
}

Interval abs_iv(const Interval& a) {
  Interval r(a.prec());
  if (mpfr_sgn(a.lo_) >= 0) return a;
  if (mpfr_sgn(a.hi_) <= 0) return -a;
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  mpfr_t t;
  mpfr_init2(t, a.prec());
  mpfr_set(t, a.hi_, MPFR_RNDU);
  if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval sqrt_iv(const Interval& a) {
  if (mpfr_sgn(a.lo_) < 0) throw DomainError("sqrt of interval with negative part");
  Interval r(a.prec());
  mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval log_iv(const Interval& a) {
  if (mpfr_sgn(a.lo_) <= 0) throw PrecisionError("log of enclosure touching 0");
  Interval r(a.prec());
  mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval exp_iv(const Interval& a) {
  Interval r(a.prec());
  mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval pow_ui(const Interval& a, unsigned long e) {
  Interval r = Interval::exact_ui(1, a.prec());
  for (unsigned long i = 0; i < e; ++i) r = r * a;
  return r;
}

Interval rootn_ui(const Interval& a, unsigned long n) {
  if (mpfr_sgn(a.lo_) < 0) throw DomainError("rootn of negative enclosure");
  Interval r(a.prec());
  mpfr_rootn_ui(r.lo_, a.lo_, n, MPFR_RNDD);
  mpfr_rootn_ui(r.hi_, a.hi_, n, MPFR_RNDU);
  return r;
}

Interval agm_iv(const Interval& a, const Interval& b) {
  // agm is increasing in both arguments, so endpoint monotonicity applies.
  if (mpfr_sgn(a.lo_) <= 0 || mpfr_sgn(b.lo_) <= 0)
    throw DomainError("agm requires positive enclosures");
  Interval r(std::max(a.prec(), b.prec()));
  mpfr_agm(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_agm(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval mul_rat(const Interval& a, const Rat& c) {
  Interval r(a.prec());
  if (c >= 0) {
    mpfr_mul_q(r.lo_, a.lo_, c.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(r.hi_, a.hi_, c.get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_mul_q(r.lo_, a.hi_, c.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(r.hi_, a.lo_, c.get_mpq_t(), MPFR_RNDU);
  }
  return r;
}

Interval add_rat(const Interval& a, const Rat& c) {
  Interval r(a.prec());
  mpfr_add_q(r.lo_, a.lo_, c.get_mpq_t(), MPFR_RNDD);
  mpfr_add_q(r.hi_, a.hi_, c.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval log_rat(const Rat& x, mpfr_prec_t prec) {
  if (x <= 0) throw DomainError("log_rat: nonpositive argument");
  return log_iv(Interval::exact(x, prec));
}

Interval log_int(const Int& x, mpfr_prec_t prec) {
  if (x <= 0) throw DomainError("log_int: nonpositive argument");
  return log_iv(Interval::exact(x, prec));
}

}  // namespace mordell
