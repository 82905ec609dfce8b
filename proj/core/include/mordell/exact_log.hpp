// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <map>
#include <string>

#include "mordell/interval.hpp"
#include "mordell/rational.hpp"

namespace mordell {

// Finite formal sum  sum_b  c_b * log(b)  with integer bases b >= 2 and
// exact rational coefficients.  Finite-prime local heights live in this
// space, so they stay exact until a caller asks for an enclosure.
class LogCombination {
 public:
  LogCombination() = default;
  static LogCombination single(const Int& base, const Rat& coeff);

  // Merges into an existing term for the same base; zero terms vanish.
  void add_term(const Int& base, const Rat& coeff);

  const std::map<Int, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LogCombination& operator+=(const LogCombination& o);
  friend LogCombination operator+(LogCombination a, const LogCombination& b) {
    a += b;
    return a;
  }
  LogCombination scaled(const Rat& c) const;
  bool operator==(const LogCombination& o) const = default;

  Interval evaluate(mpfr_prec_t prec) const;
  std::string to_string() const;

 private:
  std::map<Int, Rat> terms_;
};

}  // namespace mordell
