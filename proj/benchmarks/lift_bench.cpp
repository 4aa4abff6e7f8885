// Copyright 2026 The fockoptics Authors
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

#include <random>

#include <benchmark/benchmark.h>

#include "fockoptics/basis.hpp"
#include "fockoptics/lift.hpp"

namespace {

using namespace fockoptics;

void BM_LiftMatrix(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const ModeUnitary u = random_unitary(static_cast<std::size_t>(state.range(0)), rng);
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(lift_matrix(u, n));
}
BENCHMARK(BM_LiftMatrix)->ArgsProduct({{2, 3}, {1, 2, 4, 8}});

void BM_ApplyModeUnitary(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const ModeUnitary u = random_unitary(3, rng);
  PureState::Terms terms;
  for (const Occupation& occ : FockBasis::up_to(3, static_cast<int>(state.range(0))).states()) terms[occ] = 1.0;
  const PureState in = PureState(3, terms).normalized();
  for (auto _ : state) benchmark::DoNotOptimize(apply_mode_unitary(u, in));
}
BENCHMARK(BM_ApplyModeUnitary)->Arg(2)->Arg(4)->Arg(6);

}  // namespace
