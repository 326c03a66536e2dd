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

#include <algorithm>
#include <map>

#include "lee/counting.hpp"
#include "lee/sampler.hpp"

using namespace lee;

namespace {

// Weight multiset of the nonzero entries, sorted descending.
std::vector<std::uint32_t> weight_decomposition(const RingVector& x) {
  std::vector<std::uint32_t> w;
  for (std::uint32_t e : x.entries()) {
    if (e != 0) {
      w.push_back(static_cast<std::uint32_t>(
          std::min<std::int64_t>(e, x.modulus().m() - e)));
    }
  }
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

}  // namespace

TEST_CASE("count_decomposition examples") {
  CHECK(count_decomposition(5, Modulus(7), Partition({2, 1, 1})) == 240);
  CHECK(count_decomposition(3, Modulus(8), Partition({4, 4})) == 3);
  CHECK(count_decomposition(4, Modulus(5), Partition()) == 1);
  CHECK(count_decomposition(2, Modulus(7), Partition({1, 1, 1})) == 0);  // longer than n
  CHECK_THROWS_AS(count_decomposition(5, Modulus(7), Partition({4})), std::domain_error);
}

TEST_CASE("count_decomposition matches brute force") {
  for (std::int64_t m : {5, 7, 8}) {
    Modulus mod(m);
    const std::int64_t n = 4;
    // Bucket all vectors of Z_m^4 by decomposition.
    std::map<std::vector<std::uint32_t>, std::int64_t> buckets;
    std::vector<std::uint32_t> v(static_cast<std::size_t>(n), 0);
    for (;;) {
      RingVector x(mod, v);
      buckets[weight_decomposition(x)] += 1;
      std::size_t i = 0;
      while (i < v.size()) {
        if (v[i] + 1 < m) { v[i]++; break; }
        v[i] = 0;
        ++i;
      }
      if (i == v.size()) break;
    }
    for (const auto& [decomposition, size] : buckets) {
      CHECK(count_decomposition(n, mod, Partition(decomposition)) == size);
    }
  }
}

TEST_CASE("count_sphere examples") {
  CHECK(count_sphere(2, Modulus(5), 2) == 8);
  CHECK(count_sphere(3, Modulus(7), 0) == 1);
  CHECK(count_sphere(2, Modulus(5), 5) == 0);
  CHECK_THROWS_AS(count_sphere(2, Modulus(5), -1), std::domain_error);
}

TEST_CASE("count_sphere matches enumeration and covers the space") {
  for (std::int64_t m = 4; m <= 9; ++m) {
    Modulus mod(m);
    for (std::int64_t n = 1; n <= 4; ++n) {
      double space = 1;
      for (std::int64_t i = 0; i < n; ++i) space *= static_cast<double>(m);
      if (space > 1e5) continue;
      BigInt sum(0);
      for (std::int64_t t = 0; t <= n * mod.radius(); ++t) {
        std::int64_t enumerated = 0;
        enumerate_sphere(n, mod, t, [&](const RingVector&) {
          ++enumerated;
          return true;
        });
        CHECK(count_sphere(n, mod, t) == enumerated);
        sum += count_sphere(n, mod, t);
      }
      BigInt mn(1);
      for (std::int64_t i = 0; i < n; ++i) mn *= m;
      CHECK(sum == mn);
    }
  }
}

TEST_CASE("decomposition counts are divisible by the sign freedom") {
  for (std::int64_t m : {5, 7, 8, 9}) {
    Modulus mod(m);
    for (std::int64_t t = 1; t <= 10; ++t) {
      for_each_decomposition(6, mod, t, [&](std::span<const std::int64_t> counts,
                                            const BigInt& c) {
        std::int64_t len = 0;
        for (std::size_t v = 1; v < counts.size(); ++v) len += counts[v];
        std::int64_t exponent = len;
        if (mod.is_even()) exponent -= counts[static_cast<std::size_t>(mod.radius())];
        BigInt pow2(1);
        mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
        CHECK(mpz_divisible_p(c.get_mpz_t(), pow2.get_mpz_t()));
        return true;
      });
    }
  }
}

TEST_CASE("classes partition the sphere") {
  for (std::int64_t m : {4, 5, 7, 8}) {
    Modulus mod(m);
    for (std::int64_t t = 0; t <= 9; ++t) {
      BigInt sum(0);
      for_each_decomposition(5, mod, t,
                             [&](std::span<const std::int64_t>, const BigInt& c) {
                               sum += c;
                               return true;
                             });
      CHECK(sum == count_sphere(5, mod, t));
    }
  }
}

TEST_CASE("walk order matches partition enumeration") {
  const Modulus mod(8);
  const std::int64_t n = 5;
  const std::int64_t t = 9;
  std::vector<Partition> walked;
  for_each_decomposition(n, mod, t, [&](std::span<const std::int64_t> counts, const BigInt&) {
    walked.push_back(Partition::from_value_counts(counts));
    return true;
  });
  std::vector<Partition> expected;
  for (const Partition& p : enumerate_partitions(t, static_cast<std::uint32_t>(mod.radius()))) {
    if (static_cast<std::int64_t>(p.length()) <= n) expected.push_back(p);
  }
  CHECK(walked == expected);
}

TEST_CASE("chunked walk agrees with the full walk") {
  for (std::int64_t m : {5, 7, 8}) {
    Modulus mod(m);
    for (std::int64_t t : {1, 4, 9, 12}) {
      auto chunks = decomposition_chunk_summaries(6, mod, t);
      CHECK(static_cast<std::int64_t>(chunks.size()) == decomposition_chunk_count(mod, t));
      BigInt total(0);
      std::int64_t classes = 0;
      for (const auto& c : chunks) {
        total += c.total;
        classes += c.classes;
      }
      CHECK(total == count_sphere(6, mod, t));
      // Chunked re-walk covers the same classes in the same order.
      std::vector<Partition> via_chunks;
      for (std::size_t c = 0; c < chunks.size(); ++c) {
        for_each_decomposition_in_chunk(6, mod, t, static_cast<std::int64_t>(c),
                                        [&](std::span<const std::int64_t> counts, const BigInt&) {
                                          via_chunks.push_back(
                                              Partition::from_value_counts(counts));
                                          return true;
                                        });
      }
      std::vector<Partition> full;
      for_each_decomposition(6, mod, t, [&](std::span<const std::int64_t> counts, const BigInt&) {
        full.push_back(Partition::from_value_counts(counts));
        return true;
      });
      CHECK(via_chunks == full);
      CHECK(classes == static_cast<std::int64_t>(full.size()));
    }
  }
}

TEST_CASE("parallel chunk summaries are identical") {
  const Modulus mod(7);
  auto sequential = decomposition_chunk_summaries(30, mod, 40, 1);
  auto parallel = decomposition_chunk_summaries(30, mod, 40, 4);
  REQUIRE(sequential.size() == parallel.size());
  for (std::size_t i = 0; i < sequential.size(); ++i) {
    CHECK(sequential[i].total == parallel[i].total);
    CHECK(sequential[i].classes == parallel[i].classes);
  }
}

TEST_CASE("partition distribution examples") {
  SUBCASE("two equal classes") {
    auto dist = PartitionDistribution::build(2, Modulus(5), 2);
    REQUIRE(dist.class_count() == 2);
    CHECK(dist.total_count() == 8);
    auto e0 = dist.entry(0);
    auto e1 = dist.entry(1);
    CHECK(e0.partition == Partition({2}));
    CHECK(e1.partition == Partition({1, 1}));
    CHECK(e0.probability == make_rational(BigInt(4), BigInt(8)));
    CHECK(e1.probability == make_rational(BigInt(1), BigInt(2)));
    CHECK(e0.probability + e1.probability == 1);
  }
  SUBCASE("single class spheres") {
    auto a = PartitionDistribution::build(1, Modulus(7), 3);
    REQUIRE(a.class_count() == 1);
    CHECK(a.entry(0).partition == Partition({3}));
    CHECK(a.entry(0).probability == 1);
    auto b = PartitionDistribution::build(2, Modulus(8), 8);
    REQUIRE(b.class_count() == 1);
    CHECK(b.entry(0).partition == Partition({4, 4}));
    CHECK(b.entry(0).probability == 1);
    CHECK(b.total_count() == 1);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(PartitionDistribution::build(2, Modulus(5), 0), std::domain_error);
    CHECK_THROWS_AS(PartitionDistribution::build(2, Modulus(5), 5), std::domain_error);
  }
}

TEST_CASE("distribution probabilities sum to one exactly") {
  for (std::int64_t m : {4, 7, 8}) {
    Modulus mod(m);
    for (std::int64_t t : {1, 5, 11}) {
      if (t > 6 * mod.radius()) continue;
      auto dist = PartitionDistribution::build(6, mod, t);
      BigRat sum(0);
      for (std::size_t i = 0; i < static_cast<std::size_t>(dist.class_count()); ++i) {
        sum += dist.entry(i).probability;
      }
      CHECK(sum == 1);
    }
  }
}

TEST_CASE("locate inverts the cumulative counts") {
  auto dist = PartitionDistribution::build(4, Modulus(7), 5);
  BigInt position(0);
  for (std::size_t i = 0; i < static_cast<std::size_t>(dist.class_count()); ++i) {
    const BigInt size = dist.entry(i).count;
    CHECK(dist.locate(position) == i);
    CHECK(dist.locate(position + size - 1) == i);
    position += size;
  }
  CHECK(position == dist.total_count());
}

TEST_CASE("streaming mode matches materialized mode") {
  DistributionBuildOptions tiny;
  tiny.materialize_budget_bytes = 0;
  auto streaming = PartitionDistribution::build(6, Modulus(7), 9, tiny);
  auto materialized = PartitionDistribution::build(6, Modulus(7), 9);
  CHECK_FALSE(streaming.materialized());
  CHECK(materialized.materialized());
  CHECK(streaming.total_count() == materialized.total_count());
  CHECK(streaming.class_count() == materialized.class_count());
  std::vector<std::pair<Partition, BigInt>> a, b;
  streaming.for_each_class([&](std::size_t, std::span<const std::int64_t> counts,
                               const BigInt& c) {
    a.emplace_back(Partition::from_value_counts(counts), c);
    return true;
  });
  materialized.for_each_class([&](std::size_t, std::span<const std::int64_t> counts,
                                  const BigInt& c) {
    b.emplace_back(Partition::from_value_counts(counts), c);
    return true;
  });
  CHECK(a == b);
  CHECK_THROWS_AS(streaming.entry(0), internal_error);
}

TEST_CASE("snapshot round trip") {
  auto dist = PartitionDistribution::build(5, Modulus(8), 7);
  const std::string text = dist.to_json();
  auto restored = PartitionDistribution::from_json(text);
  CHECK(restored.n() == dist.n());
  CHECK(restored.t() == dist.t());
  CHECK(restored.modulus() == dist.modulus());
  CHECK(restored.total_count() == dist.total_count());
  REQUIRE(restored.class_count() == dist.class_count());
  for (std::size_t i = 0; i < static_cast<std::size_t>(dist.class_count()); ++i) {
    CHECK(restored.entry(i).partition == dist.entry(i).partition);
    CHECK(restored.entry(i).probability == dist.entry(i).probability);
  }

  SUBCASE("tampered snapshots are rejected") {
    std::string bad = text;
    const auto pos = bad.find("\"version\":1");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 11, "\"version\":2");
    CHECK_THROWS_AS(PartitionDistribution::from_json(bad), std::domain_error);
  }
}
