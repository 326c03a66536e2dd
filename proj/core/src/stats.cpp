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

#include "lee/stats.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace lee {

double chi_square_tail(double degrees_of_freedom, double x) {
  if (degrees_of_freedom < 0 || x < 0) {
    throw std::domain_error("chi_square_tail: negative argument");
  }
  if (degrees_of_freedom == 0) return x > 0 ? 0.0 : 1.0;
  if (x == 0) return 1.0;
  return boost::math::gamma_q(degrees_of_freedom / 2.0, x / 2.0);
}

WilsonInterval wilson_interval(std::int64_t successes, std::int64_t trials, double z) {
  if (trials <= 0 || successes < 0 || successes > trials) {
    throw std::domain_error("wilson_interval: invalid counts");
  }
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  // Clamp to [0, 1] and keep the point estimate inside despite rounding.
  return WilsonInterval{std::min(p, std::max(0.0, center - half)),
                        std::max(p, std::min(1.0, center + half))};
}

}  // namespace lee
