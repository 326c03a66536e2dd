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
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lee/bigint.hpp"

namespace lee {

// Integer partition: a non-increasing sequence of positive parts. The empty
// partition (of 0) is allowed. For a partition of t with parts at most k, the
// length lies in [ceil(t/k), t].
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::uint32_t> parts);

  // Builds a partition from occurrence counts: count_by_value[v] parts equal
  // to v, for v >= 1 (index 0 is ignored).
  static Partition from_value_counts(std::span<const std::int64_t> count_by_value);

  std::int64_t total() const noexcept { return total_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  std::uint32_t max_part() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  const std::vector<std::uint32_t>& parts() const noexcept { return parts_; }

  // (part value, occurrence count), in decreasing part order.
  std::vector<std::pair<std::uint32_t, std::int64_t>> multiplicities() const;
  std::int64_t multiplicity_of(std::uint32_t value) const noexcept;

  std::string to_string() const;  // "(3,1,1)"; "()" for the empty partition

  friend bool operator==(const Partition&, const Partition&) noexcept = default;

 private:
  struct Trusted {};
  Partition(Trusted, std::vector<std::uint32_t> parts, std::int64_t total) noexcept
      : parts_(std::move(parts)), total_(total) {}

  friend class PartitionRange;

  std::vector<std::uint32_t> parts_;
  std::int64_t total_ = 0;
};

// Number of distinct orderings of the parts: length! / prod(multiplicity!).
BigInt permutation_count(const Partition& p);

// Streams the partitions of t whose parts are at most max_part, in decreasing
// lexicographic order, optionally restricted to a fixed number of parts. Each
// partition is produced once; iteration keeps only the current partition in
// memory.
class PartitionRange {
 public:
  PartitionRange(std::int64_t t, std::uint32_t max_part,
                 std::optional<std::int64_t> length = std::nullopt);

  class iterator {
   public:
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    const Partition& operator*() const noexcept { return current_; }
    const Partition* operator->() const noexcept { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept {
      return it.done_;
    }

   private:
    friend class PartitionRange;
    iterator(std::int64_t t, std::uint32_t max_part, std::optional<std::int64_t> length);

    void advance_raw();
    void skip_filtered();

    Partition current_;
    std::uint32_t max_part_ = 1;
    std::optional<std::int64_t> length_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(t_, max_part_, length_); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  std::int64_t t_;
  std::uint32_t max_part_;
  std::optional<std::int64_t> length_;
};

inline PartitionRange enumerate_partitions(std::int64_t t, std::uint32_t max_part,
                                           std::optional<std::int64_t> length = std::nullopt) {
  return PartitionRange(t, max_part, length);
}

// Materialized enumeration, for small t.
std::vector<Partition> all_partitions(std::int64_t t, std::uint32_t max_part,
                                      std::optional<std::int64_t> length = std::nullopt);

}  // namespace lee
