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

#include "lee/counting.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include <json.hpp>

#include "decomposition_fold.hpp"
#include "lee/version.hpp"

namespace lee {

namespace {

constexpr std::int64_t kMaxLength = std::int64_t{1} << 30;
constexpr std::int64_t kMaxWeight = std::int64_t{1} << 30;

void check_scale(std::int64_t n, std::int64_t t) {
  if (n < 0 || n > kMaxLength) {
    throw std::domain_error("vector length out of supported range");
  }
  if (t > kMaxWeight) {
    throw std::domain_error("Lee weight out of supported range");
  }
}

}  // namespace

BigInt count_decomposition(std::int64_t n, const Modulus& mod, const Partition& p) {
  check_scale(n, p.total());
  if (p.max_part() > mod.radius()) {
    throw std::domain_error("count_decomposition: part " + std::to_string(p.max_part()) +
                            " exceeds the Lee radius " + std::to_string(mod.radius()));
  }
  const std::int64_t len = static_cast<std::int64_t>(p.length());
  if (len > n) return BigInt(0);
  std::int64_t exponent = len;
  if (mod.is_even()) exponent -= p.multiplicity_of(static_cast<std::uint32_t>(mod.radius()));
  BigInt result = permutation_count(p) * binomial(n, len);
  mpz_mul_2exp(result.get_mpz_t(), result.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
  return result;
}

BigInt count_sphere(std::int64_t n, const Modulus& mod, std::int64_t t) {
  if (t < 0) throw std::domain_error("count_sphere: t must be nonnegative");
  check_scale(n, t);
  if (t > n * mod.radius()) return BigInt(0);
  BigInt total(0);
  detail::fold_decompositions(n, mod, t, -1,
                              [&](std::span<const std::int64_t>, const BigInt& count) {
                                total += count;
                                return true;
                              });
  return total;
}

bool for_each_decomposition(std::int64_t n, const Modulus& mod, std::int64_t t,
                            const DecompositionVisitor& visit) {
  if (t < 0) throw std::domain_error("for_each_decomposition: t must be nonnegative");
  check_scale(n, t);
  return detail::fold_decompositions(n, mod, t, -1, visit);
}

std::int64_t decomposition_chunk_count(const Modulus& mod, std::int64_t t) {
  if (t < 0) throw std::domain_error("decomposition_chunk_count: t must be nonnegative");
  return detail::fold_chunk_count(mod, t);
}

bool for_each_decomposition_in_chunk(std::int64_t n, const Modulus& mod, std::int64_t t,
                                     std::int64_t chunk, const DecompositionVisitor& visit) {
  if (t < 0) throw std::domain_error("for_each_decomposition_in_chunk: t must be nonnegative");
  if (chunk < 0 || chunk >= detail::fold_chunk_count(mod, t)) {
    throw std::domain_error("for_each_decomposition_in_chunk: chunk index out of range");
  }
  check_scale(n, t);
  return detail::fold_decompositions(n, mod, t, chunk, visit);
}

std::vector<ChunkSummary> decomposition_chunk_summaries(std::int64_t n, const Modulus& mod,
                                                        std::int64_t t, int jobs) {
  if (t < 0) throw std::domain_error("decomposition_chunk_summaries: t must be nonnegative");
  check_scale(n, t);
  const std::int64_t chunks = detail::fold_chunk_count(mod, t);
  std::vector<ChunkSummary> out(static_cast<std::size_t>(chunks));

  auto run_chunk = [&](std::int64_t c) {
    ChunkSummary& s = out[static_cast<std::size_t>(c)];
    s.total = 0;
    s.classes = 0;
    detail::fold_decompositions(n, mod, t, c,
                                [&](std::span<const std::int64_t>, const BigInt& count) {
                                  s.total += count;
                                  ++s.classes;
                                  return true;
                                });
  };

  if (jobs <= 1 || chunks == 1) {
    for (std::int64_t c = 0; c < chunks; ++c) run_chunk(c);
    return out;
  }

  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::int64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      run_chunk(c);
    }
  };
  std::vector<std::thread> pool;
  const int workers = std::min<std::int64_t>(jobs, chunks);
  pool.reserve(static_cast<std::size_t>(workers));
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

PartitionDistribution PartitionDistribution::build(std::int64_t n, const Modulus& mod,
                                                   std::int64_t t, const BuildOptions& options) {
  if (t <= 0) {
    throw std::domain_error("build_partition_distribution: t must be positive");
  }
  if (t > n * mod.radius()) {
    throw std::domain_error("build_partition_distribution: t = " + std::to_string(t) +
                            " exceeds the maximum weight n*r = " + std::to_string(n * mod.radius()));
  }
  check_scale(n, t);

  PartitionDistribution dist(n, mod, t);
  dist.chunks_ = decomposition_chunk_summaries(n, mod, t, options.jobs);
  dist.total_ = 0;
  dist.classes_ = 0;
  for (const ChunkSummary& c : dist.chunks_) {
    dist.total_ += c.total;
    dist.classes_ += c.classes;
  }
  if (dist.classes_ == 0 || dist.total_ == 0) {
    throw internal_error("build_partition_distribution: empty sphere for feasible t");
  }

  const std::size_t r = static_cast<std::size_t>(mod.radius());
  const std::size_t total_bytes = mpz_sizeinbase(dist.total_.get_mpz_t(), 2) / 8 + 1;
  const std::size_t per_class = r * sizeof(std::int64_t) + total_bytes + 48;
  if (static_cast<std::size_t>(dist.classes_) <= options.materialize_budget_bytes / per_class) {
    dist.value_counts_.reserve(static_cast<std::size_t>(dist.classes_) * r);
    dist.cumulative_.reserve(static_cast<std::size_t>(dist.classes_));
    BigInt running(0);
    detail::fold_decompositions(
        n, mod, t, -1, [&](std::span<const std::int64_t> counts, const BigInt& count) {
          dist.value_counts_.insert(dist.value_counts_.end(), counts.begin() + 1, counts.end());
          running += count;
          dist.cumulative_.push_back(running);
          return true;
        });
    if (running != dist.total_) {
      throw internal_error("build_partition_distribution: chunk totals disagree with the walk");
    }
    dist.materialized_ = true;
  }
  return dist;
}

std::size_t PartitionDistribution::locate(const BigInt& v) const {
  if (!materialized_) {
    throw internal_error("PartitionDistribution::locate requires a materialized distribution");
  }
  if (v < 0 || v >= total_) {
    throw internal_error("PartitionDistribution::locate: position out of range");
  }
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), v);
  return static_cast<std::size_t>(it - cumulative_.begin());
}

DistributionEntry PartitionDistribution::entry(std::size_t index) const {
  if (!materialized_) {
    throw internal_error("PartitionDistribution::entry requires a materialized distribution");
  }
  if (index >= cumulative_.size()) {
    throw std::domain_error("PartitionDistribution::entry: index out of range");
  }
  const std::size_t r = static_cast<std::size_t>(mod_.radius());
  std::vector<std::int64_t> counts(r + 1, 0);
  std::copy(row(index), row(index) + r, counts.begin() + 1);
  DistributionEntry e;
  e.partition = Partition::from_value_counts(counts);
  e.count = index == 0 ? cumulative_[0] : BigInt(cumulative_[index] - cumulative_[index - 1]);
  e.probability = make_rational(e.count, total_);
  return e;
}

void PartitionDistribution::for_each_class(
    const std::function<bool(std::size_t, std::span<const std::int64_t>, const BigInt&)>& visit)
    const {
  if (materialized_) {
    const std::size_t r = static_cast<std::size_t>(mod_.radius());
    std::vector<std::int64_t> counts(r + 1, 0);
    BigInt count;
    for (std::size_t i = 0; i < cumulative_.size(); ++i) {
      std::copy(row(i), row(i) + r, counts.begin() + 1);
      count = i == 0 ? cumulative_[0] : BigInt(cumulative_[i] - cumulative_[i - 1]);
      if (!visit(i, std::span<const std::int64_t>(counts), count)) return;
    }
    return;
  }
  std::size_t index = 0;
  detail::fold_decompositions(n_, mod_, t_, -1,
                              [&](std::span<const std::int64_t> counts, const BigInt& count) {
                                return visit(index++, counts, count);
                              });
}

std::string PartitionDistribution::to_json() const {
  if (!materialized_) {
    throw std::domain_error("PartitionDistribution::to_json: distribution is not materialized");
  }
  nlohmann::json doc;
  doc["format"] = "leechannel.partition-distribution";
  doc["version"] = 1;
  doc["tool_version"] = std::string(kVersion);
  doc["n"] = n_;
  doc["m"] = mod_.m();
  doc["t"] = t_;
  doc["total"] = to_decimal(total_);
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t i = 0; i < cumulative_.size(); ++i) {
    DistributionEntry e = entry(i);
    nlohmann::json row;
    row["parts"] = e.partition.parts();
    row["num"] = to_decimal(e.probability.get_num());
    row["den"] = to_decimal(e.probability.get_den());
    classes.push_back(std::move(row));
  }
  doc["classes"] = std::move(classes);
  return doc.dump();
}

PartitionDistribution PartitionDistribution::from_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  if (doc.at("format").get<std::string>() != "leechannel.partition-distribution" ||
      doc.at("version").get<int>() != 1) {
    throw std::domain_error("partition distribution snapshot: unknown format");
  }
  if (doc.at("tool_version").get<std::string>() != kVersion) {
    throw std::domain_error("partition distribution snapshot: tool version mismatch");
  }
  const std::int64_t n = doc.at("n").get<std::int64_t>();
  const Modulus mod(doc.at("m").get<std::int64_t>());
  const std::int64_t t = doc.at("t").get<std::int64_t>();

  PartitionDistribution dist(n, mod, t);
  dist.total_ = bigint_from_decimal(doc.at("total").get<std::string>());
  if (dist.total_ <= 0) throw std::domain_error("partition distribution snapshot: bad total");

  const std::size_t r = static_cast<std::size_t>(mod.radius());
  BigInt running(0);
  for (const auto& row : doc.at("classes")) {
    Partition p(row.at("parts").get<std::vector<std::uint32_t>>());
    if (p.total() != t || p.max_part() > mod.radius() ||
        static_cast<std::int64_t>(p.length()) > n) {
      throw std::domain_error("partition distribution snapshot: invalid class");
    }
    const BigInt num = bigint_from_decimal(row.at("num").get<std::string>());
    const BigInt den = bigint_from_decimal(row.at("den").get<std::string>());
    if (den <= 0 || num < 0) {
      throw std::domain_error("partition distribution snapshot: invalid probability");
    }
    // count = total * num / den must be integral.
    BigInt count = dist.total_ * num;
    if (!mpz_divisible_p(count.get_mpz_t(), den.get_mpz_t())) {
      throw std::domain_error("partition distribution snapshot: non-integral class size");
    }
    mpz_divexact(count.get_mpz_t(), count.get_mpz_t(), den.get_mpz_t());

    std::vector<std::int64_t> counts(r + 1, 0);
    for (std::uint32_t part : p.parts()) counts[part] += 1;
    dist.value_counts_.insert(dist.value_counts_.end(), counts.begin() + 1, counts.end());
    running += count;
    dist.cumulative_.push_back(running);
  }
  if (running != dist.total_) {
    throw std::domain_error("partition distribution snapshot: probabilities do not sum to 1");
  }
  dist.classes_ = static_cast<std::int64_t>(dist.cumulative_.size());
  dist.materialized_ = true;
  return dist;
}

}  // namespace lee
