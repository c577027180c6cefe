// Copyright 2026 The lrsched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "lrsched/instance_factory.hpp"
#include "lrsched/lr_solver.hpp"
#include "lrsched/lr_solver_rd.hpp"
#include "lrsched/oracle.hpp"
#include "lrsched/primal_dual.hpp"

namespace {

using namespace lrsched;

void BM_LrCounterexample(benchmark::State& state) {
  const Instance cx = counterexample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lr_cs(cx));
}
BENCHMARK(BM_LrCounterexample)->Arg(4)->Arg(10)->Arg(100)->Arg(400);

void BM_PrimalDualCounterexample(benchmark::State& state) {
  const Instance cx = counterexample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(primal_dual_solve(cx));
}
BENCHMARK(BM_PrimalDualCounterexample)->Arg(4)->Arg(10)->Arg(100)->Arg(400);

// range(0) = n, step costs, p_max 6
void BM_LrRandom(benchmark::State& state) {
  const Instance inst =
      random_instance(42, static_cast<int>(state.range(0)), 6, 1, CostModel::kStep);
  for (auto _ : state) benchmark::DoNotOptimize(lr_cs(inst));
}
BENCHMARK(BM_LrRandom)->RangeMultiplier(2)->Range(4, 32);

void BM_LrRdRandom(benchmark::State& state) {
  const Instance inst = random_instance(42, static_cast<int>(state.range(0)), 6,
                                        static_cast<int>(state.range(1)),
                                        CostModel::kWeightedTardiness);
  for (auto _ : state) benchmark::DoNotOptimize(lr_cs_rd(inst));
}
BENCHMARK(BM_LrRdRandom)->ArgsProduct({{4, 8, 16, 32}, {1, 3}});

void BM_Oracle(benchmark::State& state) {
  const Instance inst = random_instance(7, static_cast<int>(state.range(0)), 4, 1,
                                        CostModel::kWeightedCompletion);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_opt(inst));
}
BENCHMARK(BM_Oracle)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
