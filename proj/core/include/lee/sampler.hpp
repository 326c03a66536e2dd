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

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string_view>
#include <vector>

#include "lee/bigint.hpp"
#include "lee/core.hpp"
#include "lee/counting.hpp"

namespace lee {

// Seedable deterministic random stream. The generator is pinned (the 64-bit
// Mersenne twister of the C++ standard, which is bit-exact across platforms)
// and all derived draws go through explicit unbiased rejection, so a seed
// fully determines every output everywhere.
class Rng {
 public:
  static constexpr std::string_view kGeneratorName = "mt19937-64";

  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, bound), unbiased. bound = 1 consumes no randomness.
  std::uint64_t below(std::uint64_t bound);
  BigInt below(const BigInt& bound);

  // Seed for the index-th parallel substream of a root seed (splitmix64 of
  // root + (index + 1) * golden gamma).
  static std::uint64_t substream_seed(std::uint64_t root, std::uint64_t index);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Draws vectors exactly uniformly from the sphere of Lee weight t. A draw
// picks a partition class with its exact probability (integer inversion of
// the cumulative class sizes), then a uniform support, a uniform assignment
// of parts to support positions, and independent signs.
//
// Randomness is consumed in a fixed order: a batch of size b first draws the
// b class positions, then places each vector in request order. sample() is a
// batch of one. Distributions too large to materialize are served by walking
// the class enumeration once per batch.
class SphereSampler {
 public:
  SphereSampler(std::shared_ptr<const PartitionDistribution> distribution, std::uint64_t seed);

  const PartitionDistribution& distribution() const noexcept { return *dist_; }
  std::uint64_t seed() const noexcept { return seed_; }

  RingVector sample();
  std::vector<RingVector> sample_batch(std::size_t count);

 private:
  RingVector place(std::span<const std::int64_t> count_by_value);

  std::shared_ptr<const PartitionDistribution> dist_;
  std::uint64_t seed_;
  Rng rng_;
};

// Full-scan test oracle: every vector of Z_m^n with Lee weight exactly t,
// visited once, in odometer order. Refuses when m^n exceeds the budget.
void enumerate_sphere(std::int64_t n, const Modulus& mod, std::int64_t t,
                      const std::function<bool(const RingVector&)>& visit,
                      double budget = 1e6);
std::vector<RingVector> sphere_elements(std::int64_t n, const Modulus& mod, std::int64_t t,
                                        double budget = 1e6);

// Folds the sampler's selection law symbolically (class probability, then
// uniform support, part order and signs) with exact rationals, and checks
// that every sphere element receives probability exactly 1 / |sphere|.
// Never calls the sampling path itself. The fold enumerates
// C(n, len) * len! * 2^len tuples per class, so it is meant for small
// spheres.
bool sampler_law_is_uniform(std::int64_t n, const Modulus& mod, std::int64_t t);

struct ChiSquareResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t classes = 0;
};

// Pearson goodness-of-fit of the samples against the uniform distribution on
// the given sphere. Samples outside the sphere are a hard error.
ChiSquareResult chi_square_uniformity(const std::vector<RingVector>& samples,
                                      const std::vector<RingVector>& sphere);

}  // namespace lee
