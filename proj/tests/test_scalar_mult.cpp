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

#include <doctest.h>

#include <cmath>

#include "lee/channel.hpp"
#include "lee/scalar_mult.hpp"

using namespace lee;

TEST_CASE("asymptotic score basics") {
  const Modulus m5(5);
  for (double beta : {-1.5, 0.0, 0.4, 2.0}) {
    CHECK(asymptotic_score(m5, 1, beta) == 0.0);
    CHECK(asymptotic_score(m5, 4, beta) == 0.0);
  }
  CHECK(asymptotic_score(m5, 2, std::log(2.0)) == doctest::Approx(-0.25).epsilon(1e-13));
  CHECK_THROWS_AS(asymptotic_score(m5, 0, 0.5), std::domain_error);
  CHECK_THROWS_AS(asymptotic_score(m5, 5, 0.5), std::domain_error);
  CHECK_THROWS_AS(asymptotic_score(Modulus(3), 2, 0.5), std::domain_error);
}

TEST_CASE("score symmetry between a and m - a") {
  for (std::int64_t m = 4; m <= 64; ++m) {
    const Modulus mod(m);
    for (double beta : {-1.0, -0.25, 0.0, 0.25, 1.0}) {
      for (std::int64_t a = 2; a <= m / 2; ++a) {
        CHECK(asymptotic_score(mod, a, beta) == asymptotic_score(mod, m - a, beta));
      }
    }
  }
}

TEST_CASE("weight-level score coincides with the asymptotic score for odd m") {
  for (std::int64_t m : {5, 7, 9, 11, 33}) {
    const Modulus mod(m);
    for (double beta : {-0.5, 0.0, 0.3, 1.2}) {
      for (std::int64_t a = 1; a < m; ++a) {
        CHECK(weight_level_score(mod, a, beta) == asymptotic_score(mod, a, beta));
      }
    }
  }
}

TEST_CASE("scalar score table") {
  const Modulus m8(8);
  const auto scores = all_scalar_scores(m8, 0.4);
  REQUIRE(scores.size() == 7);
  for (const ScalarScore& s : scores) {
    CHECK(s.reduces == (s.score > 0.0));
    CHECK(s.score == asymptotic_score(m8, s.a, 0.4));
  }
  CHECK(scores.front().a == 1);
  CHECK(scores.front().score == 0.0);
  CHECK(scores.back().a == 7);
  CHECK(scores.back().score == 0.0);
}

TEST_CASE("asymptotic reduction probability") {
  CHECK(asymptotic_reduction_probability(Modulus(7), 1.0) == 0.0);
  CHECK(asymptotic_reduction_probability(Modulus(5), 1.0) == 0.0);
  CHECK(asymptotic_reduction_probability(Modulus(8), 3.0) > 0.0);
  CHECK(asymptotic_reduction_probability(Modulus(8), 2.5) ==
        doctest::Approx(5.0 / 7.0).epsilon(1e-12));
  CHECK_THROWS_AS(asymptotic_reduction_probability(Modulus(3), 0.5), std::domain_error);
  CHECK_THROWS_AS(asymptotic_reduction_probability(Modulus(7), 5.0), std::domain_error);
}

TEST_CASE("delta_star at primes is exactly half the radius") {
  for (std::int64_t m : {5, 7, 11, 13, 31, 53}) {
    const ThresholdResult r = delta_star(Modulus(m), 1e-6);
    CHECK(r.delta_star == doctest::Approx(static_cast<double>(m / 2) / 2.0).epsilon(1e-9));
    CHECK(r.beta_at_threshold == 0.0);
  }
}

TEST_CASE("delta_star for composite moduli") {
  CHECK(delta_star(Modulus(8), 1e-6).delta_star == doctest::Approx(1.534).epsilon(0.004));
  CHECK(delta_star(Modulus(9), 1e-6).delta_star == doctest::Approx(1.703).epsilon(0.004));
  CHECK(delta_star(Modulus(33), 1e-6).delta_star == doctest::Approx(7.03).epsilon(0.001));
  const ThresholdResult r9 = delta_star(Modulus(9), 1e-6);
  CHECK(r9.beta_at_threshold > 0.0);
  CHECK((r9.critical_a == 3 || r9.critical_a == 6));
  CHECK_THROWS_AS(delta_star(Modulus(3), 1e-4), std::domain_error);
  CHECK_THROWS_AS(delta_star(Modulus(7), 0.0), std::domain_error);
}

TEST_CASE("threshold consistency for odd moduli") {
  for (std::int64_t m : {5, 7, 9, 11, 31, 33, 53}) {
    const Modulus mod(m);
    const double ds = delta_star(mod, 1e-8).delta_star;
    CHECK(asymptotic_reduction_probability(mod, ds - 0.01) == 0.0);
    CHECK(asymptotic_reduction_probability(mod, ds + 0.01) > 0.0);
  }
  // For even m the tabulated threshold follows the weight-level convention;
  // the element-multiplicity score flips at the uniform mean instead. Both
  // sign changes are pinned here.
  const Modulus m8(8);
  const double ds8 = delta_star(m8, 1e-8).delta_star;
  const double beta_below = solve_beta_closed_form(m8, ds8 - 0.01);
  const double beta_above = solve_beta_closed_form(m8, ds8 + 0.01);
  double max_below = -HUGE_VAL, max_above = -HUGE_VAL;
  for (std::int64_t a = 2; a <= 6; ++a) {
    max_below = std::max(max_below, weight_level_score(m8, a, beta_below));
    max_above = std::max(max_above, weight_level_score(m8, a, beta_above));
  }
  CHECK(max_below <= 0.0);
  CHECK(max_above > 0.0);
  CHECK(asymptotic_reduction_probability(m8, 1.99) == 0.0);
  CHECK(asymptotic_reduction_probability(m8, 2.01) > 0.0);
}

TEST_CASE("monte carlo preconditions") {
  const Modulus m7(7);
  CHECK_THROWS_AS(monte_carlo_reduction_probability(100, m7, 0, 10, 1), std::domain_error);
  CHECK_THROWS_AS(monte_carlo_reduction_probability(100, m7, 301, 10, 1), std::domain_error);
  CHECK_THROWS_AS(monte_carlo_reduction_probability(100, m7, 50, 0, 1), std::domain_error);
  CHECK_THROWS_AS(monte_carlo_reduction_probability(100, Modulus(3), 50, 10, 1),
                  std::domain_error);
}

TEST_CASE("monte carlo single trial is a bernoulli draw") {
  const MonteCarloEstimate est = monte_carlo_reduction_probability(100, Modulus(7), 100, 1, 1);
  CHECK((est.estimate == 0.0 || est.estimate == 1.0));
  CHECK(est.trials == 1);
  CHECK(est.ci_low <= est.estimate);
  CHECK(est.ci_high >= est.estimate);
}

TEST_CASE("monte carlo estimates stay in the interval") {
  const MonteCarloEstimate est =
      monte_carlo_reduction_probability(50, Modulus(7), 50, 400, 3);
  CHECK(est.successes >= 0);
  CHECK(est.successes <= 400);
  CHECK(est.ci_low <= est.estimate);
  CHECK(est.estimate <= est.ci_high);
  // below the threshold (delta = 1 < 1.5): reductions are rare already at n=50
  CHECK(est.estimate < 0.2);
}

TEST_CASE("monte carlo reproducibility") {
  const MonteCarloEstimate a = monte_carlo_reduction_probability(40, Modulus(8), 60, 300, 5);
  const MonteCarloEstimate b = monte_carlo_reduction_probability(40, Modulus(8), 60, 300, 5);
  CHECK(a.successes == b.successes);
}

TEST_CASE("bound decomposition limits") {
  const Modulus m7(7);
  SUBCASE("huge epsilon folds into the unconditional estimate") {
    const BoundDecomposition bd = reduction_bound_decomposition(60, m7, 60, 1e9, 200, 2);
    CHECK(bd.divergence_term == 0.0);
    REQUIRE(bd.conditional_term.has_value());
    CHECK(*bd.conditional_term == bd.unconditional);
    CHECK(bd.small_divergence_trials == 200);
  }
  SUBCASE("tiny epsilon pushes all mass into the divergence term") {
    const BoundDecomposition bd = reduction_bound_decomposition(60, m7, 60, 1e-12, 200, 2);
    CHECK(bd.divergence_term == 1.0);
    CHECK_FALSE(bd.conditional_term.has_value());
    CHECK(bd.small_divergence_trials == 0);
  }
  SUBCASE("moderate epsilon at moderate n") {
    const BoundDecomposition bd = reduction_bound_decomposition(500, m7, 500, 0.01, 200, 2);
    CHECK(bd.divergence_term < 0.5);
    CHECK(bd.unconditional <= 0.05);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(reduction_bound_decomposition(60, m7, 60, 0.0, 10, 1), std::domain_error);
    CHECK_THROWS_AS(reduction_bound_decomposition(60, m7, 180, 0.1, 10, 1), std::domain_error);
  }
}
