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

#include "lee/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace lee {

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) {
      throw std::domain_error("Partition: parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::domain_error("Partition: parts must be non-increasing");
    }
    total_ += parts_[i];
  }
}

Partition Partition::from_value_counts(std::span<const std::int64_t> count_by_value) {
  std::vector<std::uint32_t> parts;
  std::int64_t total = 0;
  for (std::size_t v = count_by_value.size(); v-- > 1;) {
    const std::int64_t c = count_by_value[v];
    if (c < 0) throw std::domain_error("Partition: negative occurrence count");
    for (std::int64_t i = 0; i < c; ++i) {
      parts.push_back(static_cast<std::uint32_t>(v));
    }
    total += c * static_cast<std::int64_t>(v);
  }
  return Partition(Trusted{}, std::move(parts), total);
}

std::vector<std::pair<std::uint32_t, std::int64_t>> Partition::multiplicities() const {
  std::vector<std::pair<std::uint32_t, std::int64_t>> out;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    out.emplace_back(parts_[i], static_cast<std::int64_t>(j - i));
    i = j;
  }
  return out;
}

std::int64_t Partition::multiplicity_of(std::uint32_t value) const noexcept {
  auto lo = std::lower_bound(parts_.begin(), parts_.end(), value, std::greater<>());
  auto hi = std::upper_bound(parts_.begin(), parts_.end(), value, std::greater<>());
  return static_cast<std::int64_t>(hi - lo);
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(parts_[i]);
  }
  s += ")";
  return s;
}

BigInt permutation_count(const Partition& p) {
  // length! / prod(mult!) as a product of binomials, division free.
  BigInt result(1);
  std::int64_t remaining = static_cast<std::int64_t>(p.length());
  for (const auto& [value, count] : p.multiplicities()) {
    result *= binomial(remaining, count);
    remaining -= count;
  }
  return result;
}

PartitionRange::PartitionRange(std::int64_t t, std::uint32_t max_part,
                               std::optional<std::int64_t> length)
    : t_(t), max_part_(max_part), length_(length) {
  if (t < 0) throw std::domain_error("enumerate_partitions: t must be nonnegative");
  if (max_part == 0) throw std::domain_error("enumerate_partitions: max_part must be positive");
}

PartitionRange::iterator::iterator(std::int64_t t, std::uint32_t max_part,
                                   std::optional<std::int64_t> length)
    : max_part_(max_part), length_(length), done_(false) {
  // Greedy fill gives the lexicographically largest partition.
  std::vector<std::uint32_t> parts;
  std::int64_t total = t;
  std::int64_t q = t / max_part;
  std::int64_t rem = t % max_part;
  parts.assign(static_cast<std::size_t>(q), max_part);
  if (rem > 0) parts.push_back(static_cast<std::uint32_t>(rem));
  current_ = Partition(Partition::Trusted{}, std::move(parts), total);
  skip_filtered();
}

void PartitionRange::iterator::advance_raw() {
  std::vector<std::uint32_t>& parts = current_.parts_;
  // Rightmost part larger than 1; everything after it is a run of ones.
  std::size_t j = parts.size();
  while (j > 0 && parts[j - 1] == 1) --j;
  if (j == 0) {
    done_ = true;
    return;
  }
  --j;
  const std::int64_t tail = static_cast<std::int64_t>(parts.size() - 1 - j) + parts[j];
  const std::uint32_t c = parts[j] - 1;
  parts.resize(j);
  // Redistribute the tail greedily with parts of size at most c.
  const std::int64_t q = tail / c;
  const std::int64_t rem = tail % c;
  parts.insert(parts.end(), static_cast<std::size_t>(q), c);
  if (rem > 0) parts.push_back(static_cast<std::uint32_t>(rem));
}

void PartitionRange::iterator::skip_filtered() {
  if (!length_) return;
  while (!done_ && static_cast<std::int64_t>(current_.length()) != *length_) {
    advance_raw();
  }
}

PartitionRange::iterator& PartitionRange::iterator::operator++() {
  advance_raw();
  skip_filtered();
  return *this;
}

std::vector<Partition> all_partitions(std::int64_t t, std::uint32_t max_part,
                                      std::optional<std::int64_t> length) {
  std::vector<Partition> out;
  for (const Partition& p : enumerate_partitions(t, max_part, length)) {
    out.push_back(p);
  }
  return out;
}

}  // namespace lee
