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
#include <span>
#include <vector>

#include "lee/bigint.hpp"
#include "lee/core.hpp"

namespace lee {

// Additive channel: y = x + e componentwise mod m.
RingVector apply_channel(const RingVector& x, const RingVector& e);

// Maximum-entropy marginal over Z_m with a prescribed mean Lee weight:
// P(e) proportional to exp(-beta * lee_weight(e)). Weight symmetry gives
// P(a) = P(m - a); mean_weight is the distribution's mean Lee weight.
struct MarginalDistribution {
  Modulus modulus;
  double beta = 0.0;
  std::vector<double> probabilities;  // indexed by ring element
  double mean_weight = 0.0;
};

MarginalDistribution boltzmann_marginal(const Modulus& mod, double beta);

// Mean Lee weight of the Boltzmann family as a function of beta. Strictly
// decreasing, from radius (beta -> -inf) to 0 (beta -> +inf); at beta = 0 it
// is the mean weight of the uniform distribution on Z_m.
double elementwise_mean(const Modulus& mod, double beta);

// Mean of the companion family that weights each Lee weight value 0..radius
// once (no element multiplicities). Strictly decreasing; its value at
// beta = 0 is radius / 2. This is the rate curve behind the closed-form
// solver and the scalar-multiplication thresholds.
double weight_level_mean(const Modulus& mod, double beta);

// Inverts elementwise_mean: the beta whose Boltzmann marginal has mean Lee
// weight delta. Requires 0 < delta < radius; beta may be negative (delta
// above the uniform mean).
double solve_beta_elementwise(const Modulus& mod, double delta);

// Inverts weight_level_mean on (0, radius). The two solvers agree for even m
// and differ for odd m, where nonzero weight values occur twice among ring
// elements; both are exposed deliberately.
double solve_beta_closed_form(const Modulus& mod, double delta);

// Entropy in nats. Entries must be nonnegative and sum to 1 within 1e-9;
// zero entries contribute nothing.
double entropy(std::span<const double> p);

// D(Q || P) in nats. Requires P positive wherever Q is.
double kl_divergence(std::span<const double> q, std::span<const double> p);

// Symbol frequencies of a vector, held exactly.
struct EmpiricalDistribution {
  Modulus modulus;
  std::int64_t sample_length = 0;
  std::vector<std::int64_t> counts;  // occurrences per ring element

  BigRat frequency(std::int64_t element) const;
  std::vector<double> probabilities() const;
};

EmpiricalDistribution empirical_distribution(const RingVector& x);

}  // namespace lee
