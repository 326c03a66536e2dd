// Copyright 2026 The leechannel Authors
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

#include "lee/channel.hpp"
#include "lee/scalar_mult.hpp"

namespace {

void BM_SolveBetaElementwise(benchmark::State& state) {
  const lee::Modulus mod(state.range(0));
  const double delta = static_cast<double>(mod.radius()) * 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lee::solve_beta_elementwise(mod, delta));
  }
}
BENCHMARK(BM_SolveBetaElementwise)->Arg(7)->Arg(53)->Arg(257);

void BM_DeltaStar(benchmark::State& state) {
  const lee::Modulus mod(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lee::delta_star(mod, 1e-6));
  }
}
BENCHMARK(BM_DeltaStar)->Arg(8)->Arg(33)->Arg(53);

void BM_AsymptoticScore(benchmark::State& state) {
  const lee::Modulus mod(53);
  for (auto _ : state) {
    double sum = 0;
    for (std::int64_t a = 1; a < 53; ++a) {
      sum += lee::asymptotic_score(mod, a, 0.25);
    }
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_AsymptoticScore);

}  // namespace
