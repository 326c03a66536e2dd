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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lee/bigint.hpp"
#include "lee/core.hpp"
#include "lee/partitions.hpp"

namespace lee {

// Number of length-n vectors over Z_m whose nonzero entries have Lee weights
// equal to the parts of p:
//
//   2^(len)             * |orderings| * C(n, len)   for odd m,
//   2^(len - c_radius)  * |orderings| * C(n, len)   for even m,
//
// where c_radius is the number of parts equal to the radius. Parts larger
// than the radius are a domain error; partitions longer than n count zero
// vectors.
BigInt count_decomposition(std::int64_t n, const Modulus& mod, const Partition& p);

// Size of the sphere {x in Z_m^n : lee_weight(x) = t}: the decomposition
// counts summed over all partitions of t with parts at most radius.
BigInt count_sphere(std::int64_t n, const Modulus& mod, std::int64_t t);

// Streaming access to the decomposition classes of one sphere.
//
// Classes are visited in decreasing lexicographic order of their partition,
// restricted to lengths at most n. The visitor receives the partition as
// occurrence counts (count_by_value[v] = parts equal to v, for v in
// [1, radius]) together with the exact class size; returning false stops the
// walk. Returns true if the walk ran to completion.
using DecompositionVisitor =
    std::function<bool(std::span<const std::int64_t> count_by_value, const BigInt& count)>;
bool for_each_decomposition(std::int64_t n, const Modulus& mod, std::int64_t t,
                            const DecompositionVisitor& visit);

// The same walk split into contiguous chunks (by the leading occurrence
// count), for resumable or parallel folds. Chunks are indexed in walk order.
std::int64_t decomposition_chunk_count(const Modulus& mod, std::int64_t t);
bool for_each_decomposition_in_chunk(std::int64_t n, const Modulus& mod, std::int64_t t,
                                     std::int64_t chunk, const DecompositionVisitor& visit);

struct ChunkSummary {
  BigInt total;           // sum of class sizes in the chunk
  std::int64_t classes;   // number of classes in the chunk
};
std::vector<ChunkSummary> decomposition_chunk_summaries(std::int64_t n, const Modulus& mod,
                                                        std::int64_t t, int jobs = 1);

struct DistributionEntry {
  Partition partition;
  BigInt count;       // |class|
  BigRat probability; // |class| / |sphere|
};

struct DistributionBuildOptions {
  std::size_t materialize_budget_bytes = std::size_t{256} << 20;
  int jobs = 1;
};

// The partition-selection distribution of a sphere: every admissible
// partition of t weighted by its exact class share. Construction enumerates
// the classes once; when the index fits the memory budget the per-class
// cumulative sums are kept for O(log) inverse lookup, otherwise only chunk
// subtotals are retained and lookups walk the classes again.
class PartitionDistribution {
 public:
  using BuildOptions = DistributionBuildOptions;

  static PartitionDistribution build(std::int64_t n, const Modulus& mod, std::int64_t t,
                                     const BuildOptions& options = BuildOptions());

  std::int64_t n() const noexcept { return n_; }
  std::int64_t t() const noexcept { return t_; }
  const Modulus& modulus() const noexcept { return mod_; }
  const BigInt& total_count() const noexcept { return total_; }
  std::int64_t class_count() const noexcept { return classes_; }
  bool materialized() const noexcept { return materialized_; }

  // Class index holding position v of the cumulative count, 0 <= v < total.
  // Materialized distributions only.
  std::size_t locate(const BigInt& v) const;

  DistributionEntry entry(std::size_t index) const;  // materialized only

  // Streams (class index, value counts, class size) in walk order; works in
  // both modes. Returning false stops.
  void for_each_class(
      const std::function<bool(std::size_t index, std::span<const std::int64_t> count_by_value,
                               const BigInt& count)>& visit) const;

  // Chunk subtotals in walk order (always available).
  const std::vector<ChunkSummary>& chunk_summaries() const noexcept { return chunks_; }

  // Versioned JSON snapshot; refuses when not materialized.
  std::string to_json() const;
  static PartitionDistribution from_json(const std::string& text);

 private:
  PartitionDistribution(std::int64_t n, const Modulus& mod, std::int64_t t)
      : n_(n), mod_(mod), t_(t) {}

  std::int64_t n_;
  Modulus mod_;
  std::int64_t t_;
  BigInt total_;
  std::int64_t classes_ = 0;
  bool materialized_ = false;
  std::vector<ChunkSummary> chunks_;

  // Materialized index: per class, occurrence counts (radius values each) and
  // the cumulative class size. value_counts_ stores rows of length radius:
  // row i holds counts for part values 1..radius.
  std::vector<std::int64_t> value_counts_;
  std::vector<BigInt> cumulative_;

  const std::int64_t* row(std::size_t i) const {
    return value_counts_.data() + i * static_cast<std::size_t>(mod_.radius());
  }
};

inline PartitionDistribution build_partition_distribution(
    std::int64_t n, const Modulus& mod, std::int64_t t,
    const PartitionDistribution::BuildOptions& options = PartitionDistribution::BuildOptions()) {
  return PartitionDistribution::build(n, mod, t, options);
}

}  // namespace lee
