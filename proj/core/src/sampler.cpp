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

#include "lee/sampler.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <numeric>

#include "decomposition_fold.hpp"
#include "lee/stats.hpp"

namespace lee {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw internal_error("Rng::below: zero bound");
  if (bound == 1) return 0;
  // Modulo rejection: resample while in the biased tail.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t u = next_u64();
    if (u < limit) return u % bound;
  }
}

BigInt Rng::below(const BigInt& bound) {
  if (bound <= 0) throw internal_error("Rng::below: nonpositive bound");
  if (bound == 1) return BigInt(0);
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - (words - 1) * 64);
  const std::uint64_t top_mask =
      top_bits == 64 ? UINT64_MAX : ((std::uint64_t{1} << top_bits) - 1);
  std::vector<std::uint64_t> buf(words);
  BigInt v;
  for (;;) {
    for (std::size_t i = 0; i < words; ++i) buf[i] = next_u64();
    buf[0] &= top_mask;  // most significant word first
    mpz_import(v.get_mpz_t(), words, 1, sizeof(std::uint64_t), 0, 0, buf.data());
    if (v < bound) return v;
  }
}

std::uint64_t Rng::substream_seed(std::uint64_t root, std::uint64_t index) {
  // splitmix64 finalizer over equally spaced points of the root.
  std::uint64_t z = root + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

SphereSampler::SphereSampler(std::shared_ptr<const PartitionDistribution> distribution,
                             std::uint64_t seed)
    : dist_(std::move(distribution)), seed_(seed), rng_(seed) {
  if (!dist_) throw std::domain_error("SphereSampler: null distribution");
}

RingVector SphereSampler::place(std::span<const std::int64_t> count_by_value) {
  const Modulus& mod = dist_->modulus();
  const std::int64_t m = mod.m();
  const std::size_t n = static_cast<std::size_t>(dist_->n());

  // Parts of the drawn partition, largest first.
  std::vector<std::uint32_t> parts;
  for (std::size_t v = count_by_value.size(); v-- > 1;) {
    for (std::int64_t i = 0; i < count_by_value[v]; ++i) {
      parts.push_back(static_cast<std::uint32_t>(v));
    }
  }
  const std::size_t len = parts.size();

  // Uniform support: partial Fisher-Yates over the index pool.
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng_.below(n - i));
    std::swap(pool[i], pool[j]);
  }

  // Uniform assignment of parts to the chosen positions: shuffling the part
  // list makes every distinct arrangement equally likely.
  for (std::size_t i = len; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng_.below(i));
    std::swap(parts[i - 1], parts[j]);
  }

  std::vector<std::uint32_t> entries(n, 0);
  for (std::size_t i = 0; i < len; ++i) {
    const bool flip = (rng_.next_u64() & 1) != 0;
    const std::int64_t value = flip ? m - parts[i] : parts[i];
    entries[pool[i]] = static_cast<std::uint32_t>(value);
  }
  return RingVector(RingVector::Unchecked{}, mod, std::move(entries));
}

RingVector SphereSampler::sample() { return std::move(sample_batch(1).front()); }

std::vector<RingVector> SphereSampler::sample_batch(std::size_t count) {
  std::vector<RingVector> out;
  if (count == 0) return out;
  out.reserve(count);

  // Phase one: the exact class positions.
  std::vector<BigInt> positions(count);
  for (std::size_t i = 0; i < count; ++i) {
    positions[i] = rng_.below(dist_->total_count());
  }

  std::vector<std::vector<std::int64_t>> classes(count);
  if (dist_->materialized()) {
    const std::size_t r = static_cast<std::size_t>(dist_->modulus().radius());
    for (std::size_t i = 0; i < count; ++i) {
      const DistributionEntry e = dist_->entry(dist_->locate(positions[i]));
      std::vector<std::int64_t> counts(r + 1, 0);
      for (std::uint32_t part : e.partition.parts()) counts[part] += 1;
      classes[i] = std::move(counts);
    }
  } else {
    // One walk serves the whole batch: positions are matched in sorted order
    // against the running cumulative count, chunk by chunk; chunks that
    // contain no position are skipped using the prebuilt subtotals.
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return positions[a] < positions[b]; });

    const std::vector<ChunkSummary>& chunks = dist_->chunk_summaries();
    std::size_t next = 0;  // next position (in sorted order) to serve
    BigInt offset(0);
    BigInt running;
    for (std::size_t c = 0; c < chunks.size() && next < count; ++c) {
      BigInt chunk_end = offset + chunks[c].total;
      if (positions[order[next]] >= chunk_end) {
        offset = std::move(chunk_end);
        continue;
      }
      running = offset;
      for_each_decomposition_in_chunk(
          dist_->n(), dist_->modulus(), dist_->t(), static_cast<std::int64_t>(c),
          [&](std::span<const std::int64_t> counts, const BigInt& cnt) {
            running += cnt;
            while (next < count && positions[order[next]] < running) {
              classes[order[next]].assign(counts.begin(), counts.end());
              ++next;
            }
            return next < count;
          });
      offset = std::move(chunk_end);
    }
    if (next < count) {
      throw internal_error("sample_batch: class walk ended before all draws were served");
    }
  }

  // Phase two: placement, in request order.
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(place(classes[i]));
  }
  return out;
}

void enumerate_sphere(std::int64_t n, const Modulus& mod, std::int64_t t,
                      const std::function<bool(const RingVector&)>& visit, double budget) {
  if (n < 0) throw std::domain_error("enumerate_sphere: n must be nonnegative");
  if (t < 0) throw std::domain_error("enumerate_sphere: t must be nonnegative");
  const double space = std::pow(static_cast<double>(mod.m()), static_cast<double>(n));
  if (space > budget) {
    throw std::domain_error("enumerate_sphere: m^n = " + std::to_string(space) +
                            " exceeds the enumeration budget " + std::to_string(budget));
  }
  const std::int64_t m = mod.m();
  std::vector<std::uint32_t> entries(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> weights(static_cast<std::size_t>(n), 0);
  std::int64_t weight = 0;
  for (;;) {
    if (weight == t) {
      if (!visit(RingVector(mod, entries))) return;
    }
    // Odometer step.
    std::size_t i = 0;
    while (i < entries.size()) {
      weight -= weights[i];
      if (entries[i] + 1 < m) {
        entries[i] += 1;
        weights[i] = std::min<std::int64_t>(entries[i], m - entries[i]);
        weight += weights[i];
        break;
      }
      entries[i] = 0;
      weights[i] = 0;
      ++i;
    }
    if (i == entries.size()) return;
  }
}

std::vector<RingVector> sphere_elements(std::int64_t n, const Modulus& mod, std::int64_t t,
                                        double budget) {
  std::vector<RingVector> out;
  enumerate_sphere(n, mod, t, [&](const RingVector& x) {
    out.push_back(x);
    return true;
  }, budget);
  return out;
}

bool sampler_law_is_uniform(std::int64_t n, const Modulus& mod, std::int64_t t) {
  const PartitionDistribution dist = PartitionDistribution::build(n, mod, t);
  const std::int64_t m = mod.m();

  std::map<std::vector<std::uint32_t>, BigRat> law;
  for (std::size_t index = 0; index < static_cast<std::size_t>(dist.class_count()); ++index) {
    const DistributionEntry e = dist.entry(index);
    const std::vector<std::uint32_t>& parts = e.partition.parts();
    const std::size_t len = parts.size();

    // Probability of one (support, order, signs) tuple within this class.
    BigInt tuples = binomial(n, static_cast<std::int64_t>(len)) *
                    factorial(static_cast<std::int64_t>(len));
    mpz_mul_2exp(tuples.get_mpz_t(), tuples.get_mpz_t(), static_cast<mp_bitcnt_t>(len));
    const BigRat per_tuple = e.probability / make_rational(tuples, BigInt(1));

    // Supports as a combination odometer over positions.
    std::vector<std::int64_t> comb(len);
    for (std::size_t i = 0; i < len; ++i) comb[i] = static_cast<std::int64_t>(i);
    for (;;) {
      std::vector<std::size_t> order(len);
      std::iota(order.begin(), order.end(), std::size_t{0});
      do {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
          std::vector<std::uint32_t> vec(static_cast<std::size_t>(n), 0);
          for (std::size_t i = 0; i < len; ++i) {
            const std::uint32_t part = parts[order[i]];
            const bool flip = (mask >> i) & 1;
            vec[static_cast<std::size_t>(comb[i])] =
                flip ? static_cast<std::uint32_t>(m - part) : part;
          }
          law[std::move(vec)] += per_tuple;
        }
      } while (std::next_permutation(order.begin(), order.end()));

      // Next combination.
      std::size_t i = len;
      bool advanced = false;
      while (i-- > 0) {
        if (comb[i] < n - static_cast<std::int64_t>(len - i)) {
          comb[i] += 1;
          for (std::size_t j = i + 1; j < len; ++j) comb[j] = comb[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }

  if (BigInt(static_cast<long>(law.size())) != dist.total_count()) return false;
  const BigRat uniform = make_rational(BigInt(1), dist.total_count());
  for (const auto& [vec, p] : law) {
    if (p != uniform) return false;
  }
  return true;
}

ChiSquareResult chi_square_uniformity(const std::vector<RingVector>& samples,
                                      const std::vector<RingVector>& sphere) {
  if (sphere.empty()) throw std::domain_error("chi_square_uniformity: empty sphere");
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < sphere.size(); ++i) {
    index.emplace(sphere[i].entries(), i);
  }
  std::vector<std::int64_t> observed(sphere.size(), 0);
  for (const RingVector& s : samples) {
    auto it = index.find(s.entries());
    if (it == index.end()) {
      throw std::domain_error("chi_square_uniformity: sample outside the sphere");
    }
    observed[it->second] += 1;
  }

  ChiSquareResult result;
  result.classes = sphere.size();
  if (sphere.size() == 1 || samples.empty()) {
    return result;  // statistic 0, p-value 1
  }
  const double expected = static_cast<double>(samples.size()) / static_cast<double>(sphere.size());
  double stat = 0.0;
  for (std::int64_t o : observed) {
    const double d = static_cast<double>(o) - expected;
    stat += d * d / expected;
  }
  result.statistic = stat;
  result.p_value = chi_square_tail(static_cast<double>(sphere.size() - 1), stat);
  return result;
}

}  // namespace lee
