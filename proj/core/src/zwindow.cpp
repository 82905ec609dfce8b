// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "mordell/zwindow.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "mordell/errors.hpp"

namespace mordell {

namespace {

constexpr long kBoxBudget = 20'000'000;

// z(t, k) = A(t) + k B(t) with A = 1 - 6t^2 + 8t^3 - 3t^4, B = -8t^3 + 12t^4.
void affine_parts(const Interval& t, mpfr_prec_t prec, Interval* a, Interval* b) {
  const Interval t2 = t * t;
  const Interval t3 = t2 * t;
  // Horner on the inner factors keeps each coefficient exact.
  *a = Interval::exact(1L, prec) +
       t2 * (add_rat(t * add_rat(mul_rat(t, Rat(-3)), Rat(8)), Rat(-6)));
  *b = t3 * add_rat(mul_rat(t, Rat(12)), Rat(-8));
}

Interval eval_box(const Rat& t1, const Rat& t2, const Rat& k1, const Rat& k2,
                  mpfr_prec_t prec) {
  const Interval t =
      Interval::hull(Interval::exact(t1, prec), Interval::exact(t2, prec));
  Interval a(prec), b(prec);
  affine_parts(t, prec, &a, &b);
  if (k1 == k2) return a + mul_rat(b, k1);
  return Interval::hull(a + mul_rat(b, k1), a + mul_rat(b, k2));
}

struct Box {
  Rat t1, t2;
  int depth;
};

using BoxEval = std::function<Interval(const Rat&, const Rat&)>;

// Certified lower bound for the minimum of f over [t1, t2], within roughly
// `slack` of the true minimum when the depth cap permits.  Best-first
// branch and bound: boxes are popped in order of their downward-rounded
// enclosure floor, so the popped key under-runs every floor still on the
// frontier and therefore the global minimum; the best enclosure ceiling
// seen bounds the minimum from above, and the walk stops once the two
// close to `slack`.
struct QBox {
  double key;  // enclosure floor rounded down; doubles as the heap order
  Rat t1, t2;
  int depth;
};
struct QBoxAfter {
  bool operator()(const QBox& a, const QBox& b) const { return a.key > b.key; }
};

Rat bb_min(const BoxEval& f, const Rat& t1, const Rat& t2, double slack,
           int max_depth, long budget) {
  std::priority_queue<QBox, std::vector<QBox>, QBoxAfter> frontier;
  double best_ub = std::numeric_limits<double>::infinity();
  long evals = 0;
  const auto push_box = [&](const Rat& a, const Rat& b, int depth) {
    if (++evals > budget) throw BudgetError("bb_min: box budget exhausted");
    const Interval enc = f(a, b);
    // The rounded-up ceiling dominates some value of f, hence the minimum.
    best_ub = std::min(best_ub, enc.hi_double());
    frontier.push({enc.lo_double(), a, b, depth});
  };
  push_box(t1, t2, 0);
  while (true) {
    QBox b = frontier.top();
    frontier.pop();
    if (best_ub - b.key <= slack || b.depth >= max_depth) return Rat(b.key);
    const Rat mid = (b.t1 + b.t2) / 2;
    push_box(b.t1, mid, b.depth + 1);
    push_box(mid, b.t2, b.depth + 1);
  }
}

Rat bb_max(const BoxEval& f, const Rat& t1, const Rat& t2, double slack,
           int max_depth, long budget) {
  const BoxEval neg = [&f](const Rat& a, const Rat& b) { return -f(a, b); };
  return -bb_min(neg, t1, t2, slack, max_depth, budget);
}

}  // namespace

Interval z_enclosure(const Rat& t1, const Rat& t2, const Rat& k1, const Rat& k2,
                     mpfr_prec_t prec) {
  return eval_box(t1, t2, k1, k2, prec);
}

Rat tau_edge_upper(const Rat& k, mpfr_prec_t prec) {
  if (k <= 0 || k >= 1) throw DomainError("tau_edge_upper: need 0 < k < 1");
  const Interval root = rootn_ui(Interval::exact(k, prec), 3);
  const Interval den = Interval::exact(1L, prec) - root;
  if (!den.is_positive())
    throw PrecisionError("tau_edge_upper: cannot separate k^{1/3} from 1");
  return (Interval::exact(1L, prec) / den).hi_rat();
}

bool certify_z_window(const Rat& tau_hi, const Rat& k1, const Rat& k2,
                      const Rat& z_lo, const Rat& z_hi, mpfr_prec_t prec,
                      int max_depth, SweepStats* stats) {
  std::vector<Box> work{{Rat(0), tau_hi, 0}};
  while (!work.empty()) {
    Box b = std::move(work.back());
    work.pop_back();
    if (stats) {
      if (++stats->boxes > kBoxBudget)
        throw BudgetError("certify_z_window: box budget exhausted");
      if (b.depth > stats->max_depth) stats->max_depth = b.depth;
    }
    const Interval enc = eval_box(b.t1, b.t2, k1, k2, prec);
    if (enc.at_least(z_lo) && enc.at_most(z_hi)) continue;  // box certified
    if (enc.certainly_less(z_lo) || enc.certainly_greater(z_hi))
      return false;  // the window genuinely fails on this box
    if (b.depth >= max_depth) return false;  // undecided at depth cap
    const Rat mid = (b.t1 + b.t2) / 2;
    work.push_back({b.t1, mid, b.depth + 1});
    work.push_back({mid, b.t2, b.depth + 1});
  }
  return true;
}

std::pair<Rat, Rat> certified_z_range(const Rat& k, mpfr_prec_t prec,
                                      double slack) {
  const Rat tau_hi = tau_edge_upper(k, prec);
  const BoxEval f = [&k, prec](const Rat& a, const Rat& b) {
    return eval_box(a, b, k, k, prec);
  };
  const Rat lo = bb_min(f, Rat(0), tau_hi, slack, 60, kBoxBudget);
  const Rat hi = bb_max(f, Rat(0), tau_hi, slack, 60, kBoxBudget);
  return {lo, hi};
}

std::pair<Rat, Rat> family_k_range(int c, mpfr_prec_t prec, double slack) {
  if (c != 2 && c != 3) throw DomainError("family_k_range: c must be 2 or 3");
  // k(s) = ((1-s)^3 + 16 s^3) / (c + (4-c) s)^3 for s in [0, 1].
  const BoxEval f = [c, prec](const Rat& s1, const Rat& s2) {
    const Interval s =
        Interval::hull(Interval::exact(s1, prec), Interval::exact(s2, prec));
    const Interval one = Interval::exact(1L, prec);
    const Interval num =
        pow_ui(one - s, 3) + mul_rat(pow_ui(s, 3), Rat(16));
    const Interval den = pow_ui(add_rat(mul_rat(s, Rat(4 - c)), Rat(c)), 3);
    return num / den;
  };
  const Rat lo = bb_min(f, Rat(0), Rat(1), slack, 60, kBoxBudget);
  const Rat hi = bb_max(f, Rat(0), Rat(1), slack, 60, kBoxBudget);
  return {lo, hi};
}

bool verify_family_z_window(int c, const Rat& z_lo, const Rat& z_hi,
                            mpfr_prec_t prec, SweepStats* stats) {
  // Tight k-range first: the window's lower edge has less than 1e-6 of
  // spare margin near the family's smallest k, so overshooting k there by
  // more than ~1e-7 would eat the room the t-sweep needs.
  auto [k_lo, k_hi] = family_k_range(c, prec, 1e-7);
  // Bands widen geometrically away from k_lo: the binding configuration
  // sits at the low edge, and one k-band costs one affine sweep regardless
  // of its width.
  Rat width = parse_decimal("0.0000004");
  Rat k1 = k_lo;
  while (k1 < k_hi) {
    Rat k2 = k1 + width;
    if (k2 > k_hi) k2 = k_hi;
    const Rat tau_hi = tau_edge_upper(k2, prec);
    if (!certify_z_window(tau_hi, k1, k2, z_lo, z_hi, prec, 40, stats))
      return false;
    k1 = k2;
    width *= 2;
  }
  return true;
}

}  // namespace mordell
