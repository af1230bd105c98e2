// Copyright 2026 The Apollonius Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "apollonius/classify.h"
#include "apollonius/constructions.h"
#include "apollonius/inversion.h"
#include "apollonius/solver.h"
#include "apollonius/verify.h"

namespace apollonius {
namespace {

using GC = GeneralizedCircle;

void BM_SolveGenericTriple(benchmark::State& state) {
  const std::vector<GC> objs{GC::circle(0, 0, 1), GC::circle(4, 0, 1),
                             GC::circle(2, 3, 1)};
  const Tolerance tol = Tolerance::for_objects(objs);
  for (auto _ : state) benchmark::DoNotOptimize(solve(objs, tol));
}
BENCHMARK(BM_SolveGenericTriple);

void BM_SolveSampled(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::vector<GC>> configs;
  for (std::uint64_t i = 0; i < 64; ++i) {
    configs.push_back(
        sample_configuration(n, SamplerProfile::kGeneric, trial_seed(1, i)));
  }
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& objs = configs[k++ % configs.size()];
    benchmark::DoNotOptimize(solve(objs, Tolerance::for_objects(objs)));
  }
}
BENCHMARK(BM_SolveSampled)->DenseRange(3, 5);

void BM_SolveScenario(benchmark::State& state, const char* name) {
  const Scenario s = std::get<Scenario>(scenario_by_name(name));
  const Tolerance tol = Tolerance::for_objects(s.inputs);
  for (auto _ : state) benchmark::DoNotOptimize(solve(s.inputs, tol));
}
BENCHMARK_CAPTURE(BM_SolveScenario, c1, "c1");
BENCHMARK_CAPTURE(BM_SolveScenario, c4, "c4");
BENCHMARK_CAPTURE(BM_SolveScenario, five, "five");

void BM_OracleTriple(benchmark::State& state) {
  const std::vector<GC> objs{GC::circle(0, 0, 1), GC::circle(4, 0, 1),
                             GC::circle(2, 3, 1)};
  const Tolerance tol = Tolerance::for_objects(objs);
  OracleConfig cfg;
  cfg.starts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_solve(objs, cfg, tol));
}
BENCHMARK(BM_OracleTriple)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_FitzgeraldLabel(benchmark::State& state) {
  const GC a = GC::circle(0, 0, 1);
  const GC b = GC::circle(1.5, 0, 1);
  const GC c = GC::line({0, 1}, 1);
  const Tolerance tol;
  for (auto _ : state) benchmark::DoNotOptimize(fitzgerald_label(a, b, c, tol));
}
BENCHMARK(BM_FitzgeraldLabel);

void BM_Invert(benchmark::State& state) {
  const InversionMap m{{0.3, -0.2}, 2.0};
  const GC c = GC::circle(2, 1, 0.5);
  const Tolerance tol;
  for (auto _ : state) benchmark::DoNotOptimize(invert(c, m, tol));
}
BENCHMARK(BM_Invert);

void BM_CheckTheorem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_theorem(n, 1000, 1, std::nullopt));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_CheckTheorem)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_CheckTables(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_tables(10, 1));
}
BENCHMARK(BM_CheckTables)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace apollonius

BENCHMARK_MAIN();
