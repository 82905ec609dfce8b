// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "mordell/factor.hpp"

#include <algorithm>

#include "mordell/errors.hpp"

namespace mordell {
namespace {

// Odd primes up to limit, shared across calls.  The sieve is rebuilt only
// when a caller asks for a higher limit than any seen before.
const std::vector<uint32_t>& small_primes(uint32_t limit) {
  static std::vector<uint32_t> primes;
  static uint32_t sieved_to = 0;
  if (limit > sieved_to) {
    primes.clear();
    std::vector<bool> composite(limit + 1, false);
    for (uint64_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      primes.push_back(static_cast<uint32_t>(i));
      for (uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    sieved_to = limit;
  }
  return primes;
}

// Pollard-Brent rho.  Returns a nontrivial factor of n (composite, odd,
// not a prime power guard is the caller's job) or 0 if the iteration
// budget ran out.  The constant c is varied deterministically so results
// are reproducible.
Int pollard_brent(const Int& n, uint64_t* iters_left) {
  for (unsigned long c = 1;; ++c) {
    Int y = 2, r = 1, q = 1, g = 1, x, ys;
    const unsigned long batch = 128;
    while (g == 1) {
      x = y;
      for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
      Int k = 0;
      while (k < r && g == 1) {
        ys = y;
        Int lim = std::min(Int(batch), Int(r - k));
        if (*iters_left < batch) return 0;
        *iters_left -= batch;
        for (Int i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          Int d = x - y;
          q = q * abs(d) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += batch;
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time to recover the factor.
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        Int d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g != n) return g;
    // Whole cycle collapsed; retry with the next polynomial.
  }
}

void add_prime(Factorization* f, const Int& p, int e) { f->primes[p] += e; }

// Recursively split m (odd, > 1, no factor below the trial limit) into
// primes, within the shared rho budget.
void split(Factorization* f, Int m, uint64_t* iters_left) {
  if (m == 1) return;
  if (is_probable_prime(m)) {
    add_prime(f, m, 1);
    return;
  }
  // Perfect powers are cheap to peel off and defeat rho's worst case.
  if (mpz_perfect_power_p(m.get_mpz_t())) {
    for (unsigned long k = 2; k <= mpz_sizeinbase(m.get_mpz_t(), 2); ++k) {
      Int root;
      if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) {
        Factorization sub;
        split(&sub, root, iters_left);
        if (sub.cofactor != 1) {
          // Root did not fully factor; fold the power back in.
          f->cofactor *= m;
          return;
        }
        for (const auto& [p, e] : sub.primes) add_prime(f, p, e * static_cast<int>(k));
        return;
      }
    }
  }
  Int d = pollard_brent(m, iters_left);
  if (d == 0) {
    f->cofactor *= m;
    return;
  }
  split(f, d, iters_left);
  split(f, m / d, iters_left);
}

}  // namespace

Int Factorization::value() const {
  Int v = cofactor;
  for (const auto& [p, e] : primes) v *= pow_int(p, static_cast<unsigned long>(e));
  return sign < 0 ? Int(-v) : v;
}

bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 64) != 0;
}

Factorization factorize(const Int& n, const FactorBudget& budget) {
  if (n == 0) throw DomainError("factorize: zero");
  Factorization f;
  f.sign = n < 0 ? -1 : 1;
  Int m = abs(n);
  for (uint32_t p : small_primes(budget.trial_limit)) {
    if (m == 1) break;
    if (Int(p) * p > m) break;  // remaining m is prime
    unsigned long e = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), Int(p).get_mpz_t());
    if (e > 0) add_prime(&f, Int(p), static_cast<int>(e));
  }
  uint64_t iters = budget.rho_iters;
  split(&f, m, &iters);
  return f;
}

Tri is_squarefree(const Int& n, const FactorBudget& budget) {
  if (n == 0) return Tri::No;
  Int m = abs(n);
  if (m == 1) return Tri::Yes;
  Factorization f = factorize(m, budget);
  for (const auto& [p, e] : f.primes)
    if (e >= 2) return Tri::No;
  if (f.complete()) return Tri::Yes;
  // Unsplit composite cofactor: a perfect power proves a repeated factor,
  // anything else (it could be p*q or p^2*q) stays undecided.
  if (mpz_perfect_power_p(f.cofactor.get_mpz_t())) return Tri::No;
  return Tri::Unknown;
}

Tri is_sixth_power_free(const Int& n, const FactorBudget& budget) {
  if (n == 0) return Tri::No;
  Int m = abs(n);
  if (m == 1) return Tri::Yes;
  Factorization f = factorize(m, budget);
  for (const auto& [p, e] : f.primes)
    if (e >= 6) return Tri::No;
  if (f.complete()) return Tri::Yes;
  // Every prime in the cofactor exceeds the trial limit, so a hidden sixth
  // power forces the cofactor above trial_limit^6.
  if (f.cofactor < pow_int(Int(budget.trial_limit), 6)) return Tri::Yes;
  Int root;
  if (mpz_root(root.get_mpz_t(), f.cofactor.get_mpz_t(), 6) != 0) return Tri::No;
  return Tri::Unknown;
}

std::vector<Int> divisors(const Factorization& f, uint64_t max_divisors) {
  if (!f.complete()) throw DomainError("divisors: incomplete factorization");
  uint64_t count = 1;
  for (const auto& [p, e] : f.primes) {
    count *= static_cast<uint64_t>(e) + 1;
    if (count > max_divisors)
      throw BudgetError("divisors: more than allowed divisor candidates");
  }
  std::vector<Int> ds{1};
  for (const auto& [p, e] : f.primes) {
    const size_t sz = ds.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace mordell
