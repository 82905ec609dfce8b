// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "mordell/weierstrass.hpp"

#include "mordell/errors.hpp"

namespace mordell {

WeierstrassModel::WeierstrassModel(Rat a1, Rat a2, Rat a3, Rat a4, Rat a6)
    : a1_(std::move(a1)),
      a2_(std::move(a2)),
      a3_(std::move(a3)),
      a4_(std::move(a4)),
      a6_(std::move(a6)) {
  b2_ = a1_ * a1_ + 4 * a2_;
  b4_ = 2 * a4_ + a1_ * a3_;
  b6_ = a3_ * a3_ + 4 * a6_;
  b8_ = a1_ * a1_ * a6_ + 4 * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ -
        a4_ * a4_;
  c4_ = b2_ * b2_ - 24 * b4_;
  c6_ = -b2_ * b2_ * b2_ + 36 * b2_ * b4_ - 216 * b6_;
  disc_ = -b2_ * b2_ * b8_ - 8 * b4_ * b4_ * b4_ - 27 * b6_ * b6_ +
          9 * b2_ * b4_ * b6_;
  if (disc_ == 0) throw DomainError("WeierstrassModel: singular model");
}

bool WeierstrassModel::is_integral() const {
  return a1_.get_den() == 1 && a2_.get_den() == 1 && a3_.get_den() == 1 &&
         a4_.get_den() == 1 && a6_.get_den() == 1;
}

WeierstrassModel WeierstrassModel::shifted(const Rat& d) const {
  return WeierstrassModel(
      a1_, a2_ - 3 * d, a3_ - d * a1_, a4_ - 2 * d * a2_ + 3 * d * d,
      a6_ - d * a4_ + d * d * a2_ - d * d * d);
}

MordellCurve::MordellCurve(Int n, const FactorBudget& budget)
    : n_(std::move(n)), model_(Rat(0), Rat(0), Rat(0), Rat(0), Rat(n_)) {
  n_factors_ = factorize(n_, budget);
  // Any prime of the unfactored cofactor exceeds the trial limit, so a
  // cofactor below trial_limit^6 cannot hide a sixth power.
  cofactor_below_sixth_ =
      n_factors_.complete() ||
      n_factors_.cofactor < pow_int(Int(budget.trial_limit), 6);
  bool sq_no = false, sixth_no = false;
  for (const auto& [p, e] : n_factors_.primes) {
    if (e >= 2) sq_no = true;
    if (e >= 6) sixth_no = true;
  }
  if (sq_no)
    squarefree_ = Tri::No;
  else if (n_factors_.complete())
    squarefree_ = Tri::Yes;
  else if (mpz_perfect_power_p(n_factors_.cofactor.get_mpz_t()))
    squarefree_ = Tri::No;
  else
    squarefree_ = Tri::Unknown;
  if (sixth_no)
    sixth_power_free_ = Tri::No;
  else
    sixth_power_free_ = cofactor_below_sixth_ ? Tri::Yes : Tri::Unknown;
}

Tri MordellCurve::is_minimal() const {
  if (sixth_power_free_ == Tri::No) return Tri::No;
  if (mod_nonneg(n_, 64) == 16) return Tri::No;
  return sixth_power_free_;
}

Tri MordellCurve::has_trivial_torsion() const {
  // Torsion only depends on the curve up to isomorphism, so strip the
  // sixth powers that are visible in the factorization first.
  Int reduced = n_;
  for (const auto& [p, e] : n_factors_.primes)
    if (e >= 6) reduced /= pow_int(p, static_cast<unsigned long>(6 * (e / 6)));
  Int root;
  const bool cube = mpz_root(root.get_mpz_t(), reduced.get_mpz_t(), 3) != 0;
  // Squares and cubes descend through sixth powers, so these hits are
  // conclusive even if the cofactor still hides one.
  if (reduced == 1 || reduced == -432 || is_perfect_square(reduced) || cube)
    return Tri::No;
  return cofactor_below_sixth_ ? Tri::Yes : Tri::Unknown;
}

}  // namespace mordell
