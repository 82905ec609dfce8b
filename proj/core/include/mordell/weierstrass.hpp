// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include "mordell/factor.hpp"
#include "mordell/rational.hpp"

namespace mordell {

// Long Weierstrass model y^2 + a1·xy + a3·y = x^3 + a2·x^2 + a4·x + a6 over
// the rationals, with the quantities b2, b4, b6, b8, c4, c6 and the
// discriminant cached at construction.  Construction rejects singular models.
class WeierstrassModel {
 public:
  WeierstrassModel(Rat a1, Rat a2, Rat a3, Rat a4, Rat a6);

  const Rat& a1() const { return a1_; }
  const Rat& a2() const { return a2_; }
  const Rat& a3() const { return a3_; }
  const Rat& a4() const { return a4_; }
  const Rat& a6() const { return a6_; }

  const Rat& b2() const { return b2_; }
  const Rat& b4() const { return b4_; }
  const Rat& b6() const { return b6_; }
  const Rat& b8() const { return b8_; }
  const Rat& c4() const { return c4_; }
  const Rat& c6() const { return c6_; }
  const Rat& discriminant() const { return disc_; }

  bool is_integral() const;

  // Model with abscissa x' = x + d (substitute x = x' - d).  Same curve,
  // same discriminant and c-quantities; the b-series shifts.
  WeierstrassModel shifted(const Rat& d) const;

 private:
  Rat a1_, a2_, a3_, a4_, a6_;
  Rat b2_, b4_, b6_, b8_, c4_, c6_, disc_;
};

// The curve y^2 = x^3 + n for a nonzero integer n, bundling the model with
// the arithmetic facts about n that the height and descent layers consume.
class MordellCurve {
 public:
  explicit MordellCurve(Int n, const FactorBudget& budget = {});

  const Int& n() const { return n_; }
  const WeierstrassModel& model() const { return model_; }
  const Factorization& n_factorization() const { return n_factors_; }
  Tri n_squarefree() const { return squarefree_; }
  Tri n_sixth_power_free() const { return sixth_power_free_; }

  // Global minimality of the model: n sixth-power-free and not 16 mod 64.
  Tri is_minimal() const;

  // For sixth-power-free n the torsion subgroup is nontrivial exactly when
  // n is 1, a perfect square, a perfect cube, or -432.
  Tri has_trivial_torsion() const;

 private:
  Int n_;
  WeierstrassModel model_;
  Factorization n_factors_;
  Tri squarefree_ = Tri::Unknown;
  Tri sixth_power_free_ = Tri::Unknown;
  bool cofactor_below_sixth_ = false;
};

}  // namespace mordell
