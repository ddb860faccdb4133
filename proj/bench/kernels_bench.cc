// Copyright 2026 The dqprog Authors.
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

// Serial vs OpenMP column profiling, plus an end-to-end fit.

#include <map>

#include <benchmark/benchmark.h>

#include "dqprog/kernels.h"
#include "dqprog/runner.h"
#include "dqprog/synthetic_data.h"

namespace {

using dqprog::ColumnSnapshot;

const ColumnSnapshot& NumericColumn(std::size_t rows) {
  static std::map<std::size_t, ColumnSnapshot> cache;
  auto it = cache.find(rows);
  if (it == cache.end()) {
    it = cache.emplace(rows, dqprog::GenerateNumericHistory("x", 1, rows, 7).front()).first;
  }
  return it->second;
}

const ColumnSnapshot& TextColumn(std::size_t rows) {
  static std::map<std::size_t, ColumnSnapshot> cache;
  auto it = cache.find(rows);
  if (it == cache.end()) {
    it = cache.emplace(rows, dqprog::GenerateCategoricalHistory("s", 1, rows, 7).front())
             .first;
  }
  return it->second;
}

void BM_NumericSerial(benchmark::State& state) {
  const auto& column = NumericColumn(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dqprog::kernels::serial::Profile(column));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_NumericParallel(benchmark::State& state) {
  const auto& column = NumericColumn(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dqprog::kernels::parallel::Profile(column));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TextSerial(benchmark::State& state) {
  const auto& column = TextColumn(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dqprog::kernels::serial::Profile(column));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TextParallel(benchmark::State& state) {
  const auto& column = TextColumn(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dqprog::kernels::parallel::Profile(column));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FitNumeric(benchmark::State& state) {
  const auto history = dqprog::GenerateNumericHistory("x", 30, state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(dqprog::Fit(history, 0.001));
}

BENCHMARK(BM_NumericSerial)->Arg(10'000)->Arg(100'000)->Arg(1'000'000);
BENCHMARK(BM_NumericParallel)->Arg(10'000)->Arg(100'000)->Arg(1'000'000);
BENCHMARK(BM_TextSerial)->Arg(10'000)->Arg(100'000)->Arg(1'000'000);
BENCHMARK(BM_TextParallel)->Arg(10'000)->Arg(100'000)->Arg(1'000'000);
BENCHMARK(BM_FitNumeric)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
