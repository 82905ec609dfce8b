// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "mordell/exact_log.hpp"

#include "mordell/errors.hpp"

namespace mordell {

LogCombination LogCombination::single(const Int& base, const Rat& coeff) {
  LogCombination c;
  c.add_term(base, coeff);
  return c;
}

void LogCombination::add_term(const Int& base, const Rat& coeff) {
  if (base < 2) throw DomainError("LogCombination: base must be >= 2");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(base, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LogCombination& LogCombination::operator+=(const LogCombination& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

LogCombination LogCombination::scaled(const Rat& c) const {
  LogCombination out;
  if (c == 0) return out;
  for (const auto& [b, k] : terms_) out.terms_.emplace(b, k * c);
  return out;
}

Interval LogCombination::evaluate(mpfr_prec_t prec) const {
  Interval sum(prec);
  for (const auto& [b, c] : terms_) sum += mul_rat(log_int(b, prec), c);
  return sum;
}

std::string LogCombination::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [b, c] : terms_) {
    Rat a = c < 0 ? Rat(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (a != 1) out += a.get_str() + "*";
    out += "log(" + b.get_str() + ")";
  }
  return out;
}

}  // namespace mordell
