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

#include "lee/scalar_mult.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "lee/channel.hpp"
#include "lee/sampler.hpp"
#include "lee/stats.hpp"

namespace lee {

namespace {

void require_scalar_domain(const Modulus& mod, std::int64_t a) {
  if (mod.m() <= 3) {
    throw std::domain_error("scalar multiplication analysis requires m > 3; the Lee and Hamming "
                            "weights coincide for m <= 3");
  }
  if (a < 1 || a >= mod.m()) {
    throw std::domain_error("scalar a = " + std::to_string(a) + " not in [1, m-1]");
  }
}

// Shared kernel: sum over weight values i = 1..r of
// mult(i) * exp(-beta i) * (i - w([a i])), where mult follows the ring for
// the asymptotic score and is 1 for the weight-level score. Terms are scaled
// by the dominant exponential so the sign survives extreme beta; the scale
// is reapplied at the end (and may overflow to inf without harming the
// sign).
double score_kernel(const Modulus& mod, std::int64_t a, double beta, bool element_multiplicity) {
  const std::int64_t m = mod.m();
  const std::int64_t r = mod.radius();
  const std::int64_t shift = beta < 0 ? r : 0;
  double sum = 0.0;
  for (std::int64_t i = 1; i <= r; ++i) {
    const std::int64_t p = (a * i) % m;
    const std::int64_t w = std::min(p, m - p);
    double mult = 1.0;
    if (element_multiplicity && !(mod.is_even() && i == r)) mult = 2.0;
    sum += mult * std::exp(-beta * static_cast<double>(i - shift)) * static_cast<double>(i - w);
  }
  if (sum == 0.0 || shift == 0) return sum;
  return sum * std::exp(-beta * static_cast<double>(shift));
}

}  // namespace

double asymptotic_score(const Modulus& mod, std::int64_t a, double beta) {
  require_scalar_domain(mod, a);
  // For odd m every nonzero weight value is carried by two ring elements, so
  // the common factor 2 is dropped; for even m the single weight-r element
  // makes the multiplicities uneven and they must stay.
  return score_kernel(mod, a, beta, mod.is_even());
}

double weight_level_score(const Modulus& mod, std::int64_t a, double beta) {
  require_scalar_domain(mod, a);
  return score_kernel(mod, a, beta, false);
}

std::vector<ScalarScore> all_scalar_scores(const Modulus& mod, double beta) {
  std::vector<ScalarScore> scores;
  scores.reserve(static_cast<std::size_t>(mod.m() - 1));
  for (std::int64_t a = 1; a < mod.m(); ++a) {
    const double s = asymptotic_score(mod, a, beta);
    scores.push_back(ScalarScore{a, s, s > 0.0});
  }
  return scores;
}

double asymptotic_reduction_probability(const Modulus& mod, double delta) {
  if (mod.m() <= 3) {
    throw std::domain_error("asymptotic_reduction_probability requires m > 3");
  }
  const double beta = solve_beta_closed_form(mod, delta);
  std::int64_t positive = 0;
  for (const ScalarScore& s : all_scalar_scores(mod, beta)) {
    if (s.reduces) ++positive;
  }
  return static_cast<double>(positive) / static_cast<double>(mod.m() - 1);
}

ThresholdResult delta_star(const Modulus& mod, double tol) {
  if (mod.m() <= 3) throw std::domain_error("delta_star requires m > 3");
  if (!(tol > 0.0)) throw std::domain_error("delta_star: tol must be positive");
  const std::int64_t m = mod.m();
  const std::int64_t r = mod.radius();

  // Maximal score over the nontrivial scalars (a = 1 and m-1 score exactly
  // zero at every beta and never bind).
  auto max_score = [&](double beta) {
    double best = -HUGE_VAL;
    for (std::int64_t a = 2; a <= m - 2; ++a) {
      best = std::max(best, weight_level_score(mod, a, beta));
    }
    return best;
  };
  auto arg_max = [&](double beta) {
    double best = -HUGE_VAL;
    std::int64_t who = 1;
    for (std::int64_t a = 2; a <= m - 2; ++a) {
      const double s = weight_level_score(mod, a, beta);
      if (s > best) {
        best = s;
        who = a;
      }
    }
    return who;
  };

  ThresholdResult result{mod, 0.0, 1, 0.0};

  // At beta = 0 every score is an integer sum; for units it is exactly zero.
  // A nonpositive maximum there means no scalar ever binds for beta > 0 and
  // the threshold sits at beta = 0 itself.
  if (max_score(0.0) <= 0.0) {
    result.beta_at_threshold = 0.0;
    result.delta_star = static_cast<double>(r) / 2.0;
    result.critical_a = arg_max(0.0);
    return result;
  }

  // Largest sign change of the maximal score: scan a beta grid downward from
  // a point where every score is negative, then bisect inside the first cell
  // whose left end is positive.
  const double beta_hi = 8.0 + 2.0 * std::log(static_cast<double>(r) + 1.0);
  const int grid = 4096;
  const double h = beta_hi / grid;
  if (max_score(beta_hi) >= 0.0) {
    throw internal_error("delta_star: score still nonnegative at the top of the search range");
  }
  double lo = 0.0;
  double hi = beta_hi;
  bool found = false;
  for (int j = grid - 1; j >= 0; --j) {
    if (max_score(j * h) > 0.0) {
      lo = j * h;
      hi = (j + 1) * h;
      found = true;
      break;
    }
  }
  if (!found) throw internal_error("delta_star: lost the sign change");

  // dDelta/dBeta is bounded by the weight variance, at most r^2; stop once
  // the beta interval maps below tol.
  const double slope = static_cast<double>(r) * static_cast<double>(r) + 1.0;
  for (int i = 0; i < 200 && (hi - lo) * slope > tol * 1e-3; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (max_score(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double beta_star = 0.5 * (lo + hi);
  result.beta_at_threshold = beta_star;
  result.delta_star = weight_level_mean(mod, beta_star);
  result.critical_a = arg_max(beta_star);
  return result;
}

MonteCarloEstimate monte_carlo_reduction_probability(std::int64_t n, const Modulus& mod,
                                                     std::int64_t t, std::int64_t trials,
                                                     std::uint64_t seed,
                                                     const MonteCarloOptions& options) {
  if (mod.m() <= 3) throw std::domain_error("monte_carlo_reduction_probability requires m > 3");
  if (trials < 1) throw std::domain_error("monte_carlo_reduction_probability: trials must be >= 1");
  if (t <= 0 || t > n * mod.radius()) {
    throw std::domain_error("monte_carlo_reduction_probability: t must satisfy 0 < t <= n*r");
  }

  PartitionDistribution::BuildOptions build;
  build.jobs = options.jobs;
  build.materialize_budget_bytes = options.materialize_budget_bytes;
  auto dist = std::make_shared<const PartitionDistribution>(
      PartitionDistribution::build(n, mod, t, build));
  SphereSampler sampler(dist, seed);
  Rng scalars(Rng::substream_seed(seed, 1));

  const std::vector<RingVector> xs = sampler.sample_batch(static_cast<std::size_t>(trials));
  std::int64_t successes = 0;
  for (const RingVector& x : xs) {
    const std::int64_t a = 1 + static_cast<std::int64_t>(
                                   scalars.below(static_cast<std::uint64_t>(mod.m() - 1)));
    const std::int64_t w = lee_weight_of_multiple(a, x);
    const bool reduced = w < t;
    if ((a == 1 || a == mod.m() - 1) && w != t) {
      throw internal_error("unit scalar changed the Lee weight");
    }
    if (reduced) ++successes;
  }

  MonteCarloEstimate est;
  est.n = n;
  est.m = mod.m();
  est.t = t;
  est.seed = seed;
  est.trials = trials;
  est.successes = successes;
  est.estimate = static_cast<double>(successes) / static_cast<double>(trials);
  const WilsonInterval ci = wilson_interval(successes, trials);
  est.ci_low = ci.low;
  est.ci_high = ci.high;
  return est;
}

BoundDecomposition reduction_bound_decomposition(std::int64_t n, const Modulus& mod,
                                                 std::int64_t t, double epsilon,
                                                 std::int64_t trials, std::uint64_t seed,
                                                 const MonteCarloOptions& options) {
  if (mod.m() <= 3) throw std::domain_error("reduction_bound_decomposition requires m > 3");
  if (!(epsilon > 0.0)) throw std::domain_error("reduction_bound_decomposition: epsilon must be positive");
  if (trials < 1) throw std::domain_error("reduction_bound_decomposition: trials must be >= 1");
  if (t <= 0 || t >= n * mod.radius()) {
    throw std::domain_error(
        "reduction_bound_decomposition: t must satisfy 0 < t < n*r (the reference marginal needs "
        "an interior normalized weight)");
  }

  const double delta = static_cast<double>(t) / static_cast<double>(n);
  const MarginalDistribution star =
      boltzmann_marginal(mod, solve_beta_elementwise(mod, delta));

  PartitionDistribution::BuildOptions build;
  build.jobs = options.jobs;
  build.materialize_budget_bytes = options.materialize_budget_bytes;
  auto dist = std::make_shared<const PartitionDistribution>(
      PartitionDistribution::build(n, mod, t, build));
  SphereSampler sampler(dist, seed);
  Rng scalars(Rng::substream_seed(seed, 1));

  const std::vector<RingVector> xs = sampler.sample_batch(static_cast<std::size_t>(trials));
  std::int64_t reductions = 0;
  std::int64_t small_div = 0;
  std::int64_t small_div_reductions = 0;
  for (const RingVector& x : xs) {
    const std::int64_t a = 1 + static_cast<std::int64_t>(
                                   scalars.below(static_cast<std::uint64_t>(mod.m() - 1)));
    const bool reduced = lee_weight_of_multiple(a, x) < t;
    const double div =
        kl_divergence(empirical_distribution(x).probabilities(), star.probabilities);
    if (reduced) ++reductions;
    if (div < epsilon) {
      ++small_div;
      if (reduced) ++small_div_reductions;
    }
  }

  BoundDecomposition out;
  out.epsilon = epsilon;
  out.trials = trials;
  out.small_divergence_trials = small_div;
  out.unconditional = static_cast<double>(reductions) / static_cast<double>(trials);
  out.divergence_term =
      static_cast<double>(trials - small_div) / static_cast<double>(trials);
  if (small_div > 0) {
    out.conditional_term =
        static_cast<double>(small_div_reductions) / static_cast<double>(small_div);
  }
  return out;
}

}  // namespace lee
