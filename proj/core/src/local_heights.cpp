// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "mordell/local_heights.hpp"

#include "mordell/errors.hpp"
#include "mordell/factor.hpp"

namespace mordell {

Rat local_height_coeff(const MordellCurve& curve, const RationalPoint& P,
                       const Int& p) {
  if (P.is_infinity())
    throw DomainError("local height: point at infinity");
  if (p < 2 || !is_probable_prime(p))
    throw DomainError("local height: p must be prime");
  const Int& n = curve.n();
  if (valuation(n, p) >= 6 || (p == 2 && mod_nonneg(n, 64) == 16))
    throw DomainError("local height: model not minimal at p");

  const Int& alpha = P.alpha();
  const Int& beta = P.beta();
  const Int& delta = P.delta();
  const long vd = valuation(delta, p);
  // p | delta forces p coprime to alpha, so the case split below would
  // land in its first branch; short-circuit it.
  if (vd > 0) return Rat(2 * vd);

  ExtVal A = valuation_ext(3 * alpha * alpha, p);
  ExtVal B = valuation_ext(2 * beta, p);
  if (A <= 0 || B <= 0) return Rat(0);
  ExtVal C =
      valuation_ext(3 * alpha * (alpha * alpha * alpha + 4 * n * pow_int(delta, 6)), p);
  if (B.infinite && C.infinite)
    throw Error("local height: B and C cannot both vanish identically");
  const bool c_dominates = C.infinite || (!B.infinite && C.v >= 3 * B.v);
  if (c_dominates) return make_rat(-2 * B.v, 3);
  return make_rat(-C.v, 4);
}

namespace {

void require_global_minimal(const MordellCurve& curve) {
  switch (curve.is_minimal()) {
    case Tri::Yes:
      return;
    case Tri::No:
      throw DomainError("finite height: model is not globally minimal");
    case Tri::Unknown:
      throw BudgetError("finite height: minimality undecided within budget");
  }
}

}  // namespace

LogCombination finite_height(const MordellCurve& curve, const RationalPoint& P,
                             const FactorBudget& budget) {
  LogCombination h;
  if (P.is_infinity()) return h;
  require_global_minimal(curve);
  // The p >= 5 shortcut below silently relies on the curve equation.
  if (!on_curve(curve.model(), P))
    throw DomainError("finite height: point is not on the curve");

  const Int& n = curve.n();
  const Int& alpha = P.alpha();
  const Int& beta = P.beta();
  const Int& delta = P.delta();

  if (delta > 1) h.add_term(delta, Rat(2));

  // p = 2.  For odd n the correction is -2/3 * log 2 exactly when 2 | alpha
  // (a vanishing alpha counts as divisible); even n goes through the
  // valuation case split.
  if (mpz_odd_p(n.get_mpz_t())) {
    const bool two_divides_alpha = alpha == 0 || valuation(alpha, 2) > 0;
    if (two_divides_alpha) h.add_term(2, make_rat(-2, 3));
  } else {
    Rat corr = local_height_coeff(curve, P, 2) - 2 * valuation(delta, 2);
    h.add_term(2, corr);
  }

  // p = 3.  For 3 coprime to n the correction is -1/2 * log 3 exactly when
  // 3 | beta; otherwise fall back to the case split.
  if (n % 3 != 0) {
    const bool three_divides_beta = beta == 0 || valuation(beta, 3) > 0;
    if (three_divides_beta) h.add_term(3, make_rat(-1, 2));
  } else {
    Rat corr = local_height_coeff(curve, P, 3) - 2 * valuation(delta, 3);
    h.add_term(3, corr);
  }

  // p >= 5: a nonzero correction needs p | alpha and p | beta, which on the
  // curve forces p^2 | n, impossible for squarefree n.
  if (curve.n_squarefree() != Tri::Yes) {
    Int g;
    mpz_gcd(g.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t());
    while (g % 2 == 0) g /= 2;
    while (g % 3 == 0) g /= 3;
    if (g > 1) {
      Factorization f = factorize(g, budget);
      if (!f.complete())
        throw BudgetError("finite height: gcd(alpha, beta) resists factoring");
      for (const auto& [p, e] : f.primes) {
        (void)e;
        h.add_term(p, local_height_coeff(curve, P, p));
      }
    }
  }
  return h;
}

}  // namespace mordell
