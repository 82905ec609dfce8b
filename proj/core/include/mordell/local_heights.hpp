// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include "mordell/exact_log.hpp"
#include "mordell/point.hpp"
#include "mordell/weierstrass.hpp"

namespace mordell {

// Local canonical height at the finite prime p, divided by log p, for an
// affine point on y^2 = x^3 + n.  Normalized so that summing these times
// log p over all p and adding the archimedean part gives the height whose
// parallelogram form is the full Mordell-Weil pairing (twice the common
// per-coordinate convention).  The value is an exact rational computed by
// a valuation case split on the duplication map; it requires the model to
// be minimal at p and throws DomainError otherwise.
Rat local_height_coeff(const MordellCurve& curve, const RationalPoint& P,
                       const Int& p);

// Sum of all finite local heights as an exact log combination:
// 2*log(delta) plus corrections at 2 and 3, plus (only when n is not
// squarefree) corrections at primes p >= 5 dividing gcd(alpha, beta).
// Requires a globally minimal model.  Throws BudgetError when the needed
// squarefree/minimality/gcd factorizations stay undecided within budget.
LogCombination finite_height(const MordellCurve& curve, const RationalPoint& P,
                             const FactorBudget& budget = {});

}  // namespace mordell
