// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include <benchmark/benchmark.h>

#include "mordell/factor.hpp"
#include "mordell/interval.hpp"

namespace {

using namespace mordell;

void BM_IntervalMul(benchmark::State& state) {
  Interval a = Interval::exact(make_rat(355, 113), state.range(0));
  Interval b = sqrt_iv(Interval::exact(2, state.range(0)));
  for (auto _ : state) {
    Interval c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_IntervalMul)->Arg(128)->Arg(256)->Arg(1024);

void BM_IntervalAgm(benchmark::State& state) {
  Interval a = Interval::exact(1, state.range(0));
  Interval b = sqrt_iv(Interval::exact(3, state.range(0)));
  for (auto _ : state) {
    Interval c = agm_iv(a, b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_IntervalAgm)->Arg(128)->Arg(256)->Arg(1024);

void BM_FactorSemiprime(benchmark::State& state) {
  Int n = Int(1000003) * 1000033;
  FactorBudget budget;
  budget.trial_limit = 1000;
  for (auto _ : state) {
    Factorization f = factorize(n, budget);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_FactorSemiprime);

}  // namespace

BENCHMARK_MAIN();
