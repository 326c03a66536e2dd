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

#include "lee/counting.hpp"
#include "lee/partitions.hpp"

namespace {

void BM_EnumeratePartitions(benchmark::State& state) {
  const std::int64_t t = state.range(0);
  for (auto _ : state) {
    std::int64_t n = 0;
    for (const lee::Partition& p : lee::enumerate_partitions(t, 6)) {
      n += static_cast<std::int64_t>(p.length());
    }
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumeratePartitions)->Arg(40)->Arg(80);

void BM_CountSphere(benchmark::State& state) {
  const lee::Modulus mod(7);
  const std::int64_t t = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lee::count_sphere(128, mod, t));
  }
}
BENCHMARK(BM_CountSphere)->Arg(16)->Arg(64)->Arg(192);

void BM_ClassWalk(benchmark::State& state) {
  const lee::Modulus mod(8);
  for (auto _ : state) {
    lee::BigInt total(0);
    lee::for_each_decomposition(96, mod, state.range(0),
                                [&](std::span<const std::int64_t>, const lee::BigInt& c) {
                                  total += c;
                                  return true;
                                });
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ClassWalk)->Arg(64)->Arg(128);

void BM_BuildDistribution(benchmark::State& state) {
  const lee::Modulus mod(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lee::PartitionDistribution::build(128, mod, state.range(0)));
  }
}
BENCHMARK(BM_BuildDistribution)->Arg(32)->Arg(96);

}  // namespace

BENCHMARK_MAIN();
