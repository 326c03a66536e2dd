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
#include <optional>
#include <vector>

#include "lee/core.hpp"
#include "lee/counting.hpp"

namespace lee {

// Asymptotic score of multiplying by a: positive iff, in the large-n limit
// at the Boltzmann parameter beta, multiplication by a strictly reduces the
// expected Lee weight. For odd m,
//
//   sum_{i=1..r} exp(-beta i) (i - w([a i] mod m)),
//
// and for even m the term multiplicities follow the ring (two elements per
// weight below r, one at r):
//
//   sum_{i=1..r-1} 2 exp(-beta i) (i - w([a i])) + exp(-beta r) (r - w([a r])).
//
// Requires m > 3 and 1 <= a <= m - 1. Values can overflow to +-inf for very
// negative beta; the sign is always meaningful.
double asymptotic_score(const Modulus& mod, std::int64_t a, double beta);

// Companion score that counts every weight value 1..r exactly once for all
// m (for odd m it coincides with asymptotic_score). This is the convention
// matched to the weight-level rate curve, and the one the threshold table is
// built from.
double weight_level_score(const Modulus& mod, std::int64_t a, double beta);

struct ScalarScore {
  std::int64_t a = 1;
  double score = 0.0;
  bool reduces = false;  // score > 0
};

// Scores of every nonzero scalar at the given beta; score(1) and score(m-1)
// are exactly zero and score(a) = score(m - a).
std::vector<ScalarScore> all_scalar_scores(const Modulus& mod, double beta);

// Fraction of nonzero scalars whose asymptotic score is strictly positive at
// beta = solve_beta_closed_form(delta): the large-n probability that a
// uniform nonzero scalar strictly reduces the weight of a uniform vector of
// normalized weight delta.
double asymptotic_reduction_probability(const Modulus& mod, double delta);

struct ThresholdResult {
  Modulus modulus;
  double delta_star = 0.0;      // largest delta with no strictly reducing scalar
  std::int64_t critical_a = 1;  // scalar attaining the maximal score at the threshold
  double beta_at_threshold = 0.0;
};

// Largest normalized weight delta for which no nonzero scalar has a strictly
// positive weight-level score. Scores depend on delta only through beta, and
// every scalar's score is eventually negative for large beta, so the search
// brackets the largest sign change of the maximal score over a beta grid and
// bisects; delta follows from the weight-level rate curve. For prime m the
// threshold sits exactly at beta = 0, i.e. delta_star = radius / 2.
ThresholdResult delta_star(const Modulus& mod, double tol = 1e-4);

struct MonteCarloEstimate {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t t = 0;
  std::uint64_t seed = 0;
  std::int64_t trials = 0;
  std::int64_t successes = 0;
  double estimate = 0.0;
  double ci_low = 0.0;   // Wilson score, 95%
  double ci_high = 1.0;
};

struct MonteCarloOptions {
  int jobs = 1;
  std::size_t materialize_budget_bytes = std::size_t{256} << 20;
};

// Estimates P(lee_weight(a x) < t) for x uniform on the weight-t sphere and
// a uniform on the nonzero scalars. Every trial draws a fresh (x, a) pair;
// the scalar stream is substream 1 of the root seed.
MonteCarloEstimate monte_carlo_reduction_probability(std::int64_t n, const Modulus& mod,
                                                     std::int64_t t, std::int64_t trials,
                                                     std::uint64_t seed,
                                                     const MonteCarloOptions& options = MonteCarloOptions());

struct BoundDecomposition {
  double epsilon = 0.0;
  // P(reduction | KL(Q_x || P*) < epsilon); absent when no trial lands below
  // epsilon.
  std::optional<double> conditional_term;
  double divergence_term = 0.0;  // P(KL(Q_x || P*) >= epsilon)
  double unconditional = 0.0;
  std::int64_t trials = 0;
  std::int64_t small_divergence_trials = 0;
};

// Splits the reduction probability against the divergence of the empirical
// symbol distribution from the Boltzmann marginal P* (elementwise solver at
// delta = t / n), estimating both terms from one sample stream.
BoundDecomposition reduction_bound_decomposition(std::int64_t n, const Modulus& mod,
                                                 std::int64_t t, double epsilon,
                                                 std::int64_t trials, std::uint64_t seed,
                                                 const MonteCarloOptions& options = MonteCarloOptions());

}  // namespace lee
