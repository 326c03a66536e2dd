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

#include <random>

#include "lee/core.hpp"

using namespace lee;

namespace {

std::vector<RingVector> all_vectors(std::int64_t n, const Modulus& mod) {
  std::vector<RingVector> out;
  std::vector<std::uint32_t> v(static_cast<std::size_t>(n), 0);
  for (;;) {
    out.emplace_back(mod, v);
    std::size_t i = 0;
    while (i < v.size()) {
      if (v[i] + 1 < mod.m()) {
        v[i]++;
        break;
      }
      v[i] = 0;
      ++i;
    }
    if (i == v.size()) return out;
  }
}

}  // namespace

TEST_CASE("modulus basics") {
  Modulus m7(7);
  CHECK(m7.m() == 7);
  CHECK(m7.radius() == 3);
  CHECK_FALSE(m7.is_even());
  Modulus m8(8);
  CHECK(m8.radius() == 4);
  CHECK(m8.is_even());
  CHECK_THROWS_AS(Modulus(1), std::domain_error);
  CHECK_THROWS_AS(Modulus(0), std::domain_error);
  CHECK_THROWS_AS(Modulus(-5), std::domain_error);
}

TEST_CASE("scalar lee weight") {
  CHECK(lee_weight(5, Modulus(7)) == 2);
  CHECK(lee_weight(0, Modulus(9)) == 0);
  CHECK(lee_weight(4, Modulus(8)) == 4);
  CHECK_THROWS_AS(lee_weight(7, Modulus(7)), std::domain_error);
  CHECK_THROWS_AS(lee_weight(-1, Modulus(7)), std::domain_error);
}

TEST_CASE("scalar weight symmetry") {
  for (std::int64_t m = 2; m <= 33; ++m) {
    Modulus mod(m);
    for (std::int64_t a = 1; a <= mod.radius(); ++a) {
      CHECK(lee_weight(a, mod) == lee_weight(m - a, mod));
    }
  }
}

TEST_CASE("vector weight") {
  Modulus m7(7);
  CHECK(lee_weight(RingVector::zeros(m7, 5)) == 0);
  CHECK(lee_weight(RingVector(m7, {1, 5, 3})) == 6);
  CHECK(lee_weight(RingVector(Modulus(8), {4, 4})) == 8);
  // weight bounded by n * r
  for (const RingVector& x : all_vectors(2, Modulus(6))) {
    CHECK(lee_weight(x) >= 0);
    CHECK(lee_weight(x) <= 2 * 3);
  }
}

TEST_CASE("ring vector validation") {
  Modulus m5(5);
  CHECK_THROWS_AS(RingVector(m5, {5}), std::domain_error);
  CHECK_THROWS_AS(RingVector(m5, {0, 1, 7}), std::domain_error);
  RingVector x(m5, {0, 4});
  CHECK(x.size() == 2);
  CHECK(x[1] == 4);
}

TEST_CASE("lee distance") {
  Modulus m7(7);
  RingVector x(m7, {1, 0});
  CHECK(lee_distance(x, x) == 0);
  CHECK(lee_distance(x, RingVector(m7, {0, 6})) == 2);
  CHECK(lee_distance(RingVector(Modulus(8), {0}), RingVector(Modulus(8), {4})) == 4);
  CHECK_THROWS_AS(lee_distance(x, RingVector(m7, {1})), std::domain_error);
  CHECK_THROWS_AS(lee_distance(x, RingVector(Modulus(9), {1, 0})), std::domain_error);
  // symmetric
  RingVector y(m7, {3, 5});
  CHECK(lee_distance(x, y) == lee_distance(y, x));
}

TEST_CASE("triangle inequality, exhaustive small") {
  for (std::int64_t m : {2, 3, 5, 7, 8, 9}) {
    Modulus mod(m);
    auto vecs = all_vectors(2, mod);
    for (const auto& a : vecs) {
      for (const auto& b : vecs) {
        for (const auto& c : vecs) {
          CHECK(lee_distance(a, c) <= lee_distance(a, b) + lee_distance(b, c));
        }
      }
    }
  }
}

TEST_CASE("triangle inequality, random triples") {
  std::mt19937_64 gen(3);
  for (std::int64_t m : {4, 6, 9}) {
    Modulus mod(m);
    for (int trial = 0; trial < 3000; ++trial) {
      std::vector<std::uint32_t> a(3), b(3), c(3);
      for (int i = 0; i < 3; ++i) {
        a[i] = static_cast<std::uint32_t>(gen() % m);
        b[i] = static_cast<std::uint32_t>(gen() % m);
        c[i] = static_cast<std::uint32_t>(gen() % m);
      }
      RingVector xa(mod, a), xb(mod, b), xc(mod, c);
      CHECK(lee_distance(xa, xc) <= lee_distance(xa, xb) + lee_distance(xb, xc));
    }
  }
}

TEST_CASE("scalar multiple") {
  Modulus m7(7);
  RingVector x(m7, {3, 4});
  CHECK(scalar_multiple(1, x) == x);
  CHECK(scalar_multiple(0, x) == RingVector::zeros(m7, 2));
  CHECK(scalar_multiple(2, x) == RingVector(m7, {6, 1}));
  CHECK_THROWS_AS(scalar_multiple(7, x), std::domain_error);
  CHECK_THROWS_AS(scalar_multiple(-1, x), std::domain_error);
}

TEST_CASE("negation preserves weight") {
  std::mt19937_64 gen(5);
  for (std::int64_t m : {4, 5, 7, 8, 12}) {
    Modulus mod(m);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::uint32_t> v(6);
      for (auto& e : v) e = static_cast<std::uint32_t>(gen() % m);
      RingVector x(mod, v);
      CHECK(lee_weight(scalar_multiple(m - 1, x)) == lee_weight(x));
      CHECK(lee_weight_of_multiple(m - 1, x) == lee_weight(x));
    }
  }
}

TEST_CASE("weight of multiple matches materialized product") {
  std::mt19937_64 gen(11);
  for (std::int64_t m : {5, 8, 13}) {
    Modulus mod(m);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::uint32_t> v(5);
      for (auto& e : v) e = static_cast<std::uint32_t>(gen() % m);
      RingVector x(mod, v);
      const std::int64_t a = static_cast<std::int64_t>(gen() % m);
      CHECK(lee_weight_of_multiple(a, x) == lee_weight(scalar_multiple(a, x)));
    }
  }
}

TEST_CASE("lee weight equals hamming weight for m in {2, 3}") {
  for (std::int64_t m : {2, 3}) {
    Modulus mod(m);
    for (std::int64_t a = 0; a < m; ++a) {
      CHECK(lee_weight(a, mod) == (a == 0 ? 0 : 1));
    }
  }
}
