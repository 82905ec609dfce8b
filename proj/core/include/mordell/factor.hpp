// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mordell/rational.hpp"

namespace mordell {

// Budget for integer factorization.  Trial division runs up to trial_limit,
// then Pollard-Brent rho is allowed rho_iters group operations in total.
// When the budget runs out the result is returned incomplete instead of
// looping forever; callers that need certainty must check complete().
struct FactorBudget {
  uint32_t trial_limit = 1'000'000;
  uint64_t rho_iters = 20'000'000;
};

struct Factorization {
  std::map<Int, int> primes;  // prime -> exponent (certified prime factors)
  Int cofactor = 1;           // unfactored remainder, 1 when fully factored
  int sign = 1;

  bool complete() const { return cofactor == 1; }
  Int value() const;
};

// Miller-Rabin backed primality (error probability < 4^-64 for composites;
// small inputs are decided exactly).
bool is_probable_prime(const Int& n);

// Factor |n| (n != 0).  Always returns; primes holds what was certified
// within budget and cofactor the rest.
Factorization factorize(const Int& n, const FactorBudget& budget = {});

// Answer to a yes/no question that a work budget may leave undecided.
enum class Tri { Yes, No, Unknown };

// Square-freeness of |n| within budget.  Unknown only when the budget ran
// out on a cofactor that is neither prime, a perfect power, nor splittable.
Tri is_squarefree(const Int& n, const FactorBudget& budget = {});

// Whether no prime divides |n| six or more times.  A leftover cofactor
// below trial_limit^6 cannot hide a sixth power, so Unknown is rare.
Tri is_sixth_power_free(const Int& n, const FactorBudget& budget = {});

// All positive divisors of the factored part, in increasing order.
// Throws BudgetError if the divisor count would exceed max_divisors,
// DomainError if the factorization is incomplete.
std::vector<Int> divisors(const Factorization& f, uint64_t max_divisors);

}  // namespace mordell
