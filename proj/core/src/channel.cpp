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

#include "lee/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lee {

namespace {

constexpr double kBracket = 50.0;  // beta search interval [-50, 50]

// Elements of each Lee weight: two per nonzero weight, except a single
// element of weight m/2 when m is even.
inline double weight_multiplicity(const Modulus& mod, std::int64_t w) {
  if (w == 0) return 1.0;
  if (mod.is_even() && w == mod.radius()) return 1.0;
  return 2.0;
}

// Mean of weights w = 0..radius with the given per-weight multiplicities and
// factors exp(-beta * w). The sum is evaluated against the largest term, so
// it stays finite for beta of either sign.
double tilted_mean(const Modulus& mod, double beta, bool with_multiplicity) {
  const std::int64_t r = mod.radius();
  const std::int64_t shift = beta < 0 ? r : 0;
  double z = 0.0;
  double zw = 0.0;
  for (std::int64_t w = 0; w <= r; ++w) {
    const double mult = with_multiplicity ? weight_multiplicity(mod, w) : 1.0;
    const double q = mult * std::exp(-beta * static_cast<double>(w - shift));
    z += q;
    zw += q * static_cast<double>(w);
  }
  return zw / z;
}

double bisect_mean(const Modulus& mod, double delta, bool with_multiplicity,
                   const char* who) {
  const std::int64_t r = mod.radius();
  if (!(delta > 0.0) || !(delta < static_cast<double>(r))) {
    throw std::domain_error(std::string(who) + ": delta = " + std::to_string(delta) +
                            " outside the open interval (0, " + std::to_string(r) + ")");
  }
  auto f = [&](double beta) { return tilted_mean(mod, beta, with_multiplicity) - delta; };
  double lo = -kBracket;
  double hi = kBracket;
  double flo = f(lo);
  double fhi = f(hi);
  if (flo < 0.0 || fhi > 0.0) {
    throw std::domain_error(std::string(who) + ": delta = " + std::to_string(delta) +
                            " not attainable within the solver bracket");
  }
  // The mean is strictly decreasing in beta, so plain bisection suffices.
  for (int i = 0; i < 200 && hi - lo > 1e-16 * std::max(1.0, std::abs(lo) + std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (fm > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

RingVector apply_channel(const RingVector& x, const RingVector& e) {
  if (x.size() != e.size()) throw std::domain_error("apply_channel: length mismatch");
  if (!(x.modulus() == e.modulus())) throw std::domain_error("apply_channel: modulus mismatch");
  const std::int64_t m = x.modulus().m();
  std::vector<std::uint32_t> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(x[i]) + static_cast<std::int64_t>(e[i]);
    if (s >= m) s -= m;
    out[i] = static_cast<std::uint32_t>(s);
  }
  return RingVector(x.modulus(), std::move(out));
}

MarginalDistribution boltzmann_marginal(const Modulus& mod, double beta) {
  if (!std::isfinite(beta)) throw std::domain_error("boltzmann_marginal: beta must be finite");
  const std::int64_t m = mod.m();
  const std::int64_t r = mod.radius();
  const std::int64_t shift = beta < 0 ? r : 0;
  MarginalDistribution dist{mod, beta, std::vector<double>(static_cast<std::size_t>(m)), 0.0};
  double z = 0.0;
  for (std::int64_t e = 0; e < m; ++e) {
    const std::int64_t w = std::min(e, m - e);
    const double q = std::exp(-beta * static_cast<double>(w - shift));
    dist.probabilities[static_cast<std::size_t>(e)] = q;
    z += q;
  }
  double mean = 0.0;
  for (std::int64_t e = 0; e < m; ++e) {
    double& p = dist.probabilities[static_cast<std::size_t>(e)];
    p /= z;
    mean += p * static_cast<double>(std::min(e, m - e));
  }
  dist.mean_weight = mean;
  return dist;
}

double elementwise_mean(const Modulus& mod, double beta) { return tilted_mean(mod, beta, true); }

double weight_level_mean(const Modulus& mod, double beta) { return tilted_mean(mod, beta, false); }

double solve_beta_elementwise(const Modulus& mod, double delta) {
  return bisect_mean(mod, delta, true, "solve_beta_elementwise");
}

double solve_beta_closed_form(const Modulus& mod, double delta) {
  return bisect_mean(mod, delta, false, "solve_beta_closed_form");
}

double entropy(std::span<const double> p) {
  double sum = 0.0;
  double h = 0.0;
  for (double v : p) {
    if (v < 0.0) throw std::domain_error("entropy: negative probability");
    sum += v;
    if (v > 0.0) h -= v * std::log(v);
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::domain_error("entropy: probabilities sum to " + std::to_string(sum));
  }
  return h;
}

double kl_divergence(std::span<const double> q, std::span<const double> p) {
  if (q.size() != p.size()) throw std::domain_error("kl_divergence: size mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] < 0.0 || p[i] < 0.0) throw std::domain_error("kl_divergence: negative probability");
    if (q[i] == 0.0) continue;
    if (p[i] == 0.0) {
      throw std::domain_error("kl_divergence: q is not absolutely continuous w.r.t. p");
    }
    d += q[i] * std::log(q[i] / p[i]);
  }
  return d < 0.0 && d > -1e-12 ? 0.0 : d;
}

BigRat EmpiricalDistribution::frequency(std::int64_t element) const {
  if (element < 0 || element >= modulus.m()) {
    throw std::domain_error("EmpiricalDistribution::frequency: element out of range");
  }
  return make_rational(BigInt(counts[static_cast<std::size_t>(element)]), BigInt(sample_length));
}

std::vector<double> EmpiricalDistribution::probabilities() const {
  std::vector<double> out(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out[i] = static_cast<double>(counts[i]) / static_cast<double>(sample_length);
  }
  return out;
}

EmpiricalDistribution empirical_distribution(const RingVector& x) {
  if (x.size() == 0) {
    throw std::domain_error("empirical_distribution: vector must be nonempty");
  }
  EmpiricalDistribution dist{x.modulus(), static_cast<std::int64_t>(x.size()),
                             std::vector<std::int64_t>(static_cast<std::size_t>(x.modulus().m()), 0)};
  for (std::uint32_t e : x.entries()) {
    dist.counts[e] += 1;
  }
  return dist;
}

}  // namespace lee
