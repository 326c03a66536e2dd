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

#include <memory>

#include "lee/sampler.hpp"

namespace {

void BM_SampleOne(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  auto dist = std::make_shared<const lee::PartitionDistribution>(
      lee::PartitionDistribution::build(n, lee::Modulus(7), n / 2));
  lee::SphereSampler sampler(dist, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler.sample());
  }
}
BENCHMARK(BM_SampleOne)->Arg(64)->Arg(256);

void BM_SampleBatch(benchmark::State& state) {
  auto dist = std::make_shared<const lee::PartitionDistribution>(
      lee::PartitionDistribution::build(128, lee::Modulus(7), 64));
  lee::SphereSampler sampler(dist, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler.sample_batch(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_SampleBatch)->Arg(16)->Arg(256);

void BM_SampleBatchStreaming(benchmark::State& state) {
  lee::DistributionBuildOptions options;
  options.materialize_budget_bytes = 0;
  auto dist = std::make_shared<const lee::PartitionDistribution>(
      lee::PartitionDistribution::build(128, lee::Modulus(7), 64, options));
  lee::SphereSampler sampler(dist, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler.sample_batch(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_SampleBatchStreaming)->Arg(16)->Arg(256);

void BM_ChiSquare(benchmark::State& state) {
  const lee::Modulus mod(7);
  auto sphere = lee::sphere_elements(4, mod, 5);
  auto dist = std::make_shared<const lee::PartitionDistribution>(
      lee::PartitionDistribution::build(4, mod, 5));
  lee::SphereSampler sampler(dist, 1);
  auto samples = sampler.sample_batch(8000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lee::chi_square_uniformity(samples, sphere));
  }
}
BENCHMARK(BM_ChiSquare);

}  // namespace
