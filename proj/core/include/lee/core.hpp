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

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lee {

// A violated internal invariant, as opposed to a caller error.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Ring parameter: Z_m with Lee radius r = floor(m / 2). The radius is the
// largest Lee weight a single element can have.
class Modulus {
 public:
  // Entries are stored in 32 bits and element products must fit in int64.
  static constexpr std::int64_t kMax = std::int64_t{1} << 30;

  explicit Modulus(std::int64_t m) : m_(m) {
    if (m < 2) {
      throw std::domain_error("Modulus: m must be at least 2, got " + std::to_string(m));
    }
    if (m > kMax) {
      throw std::domain_error("Modulus: m must be at most 2^30, got " + std::to_string(m));
    }
  }

  std::int64_t m() const noexcept { return m_; }
  std::int64_t radius() const noexcept { return m_ / 2; }
  bool is_even() const noexcept { return (m_ & 1) == 0; }

  friend bool operator==(const Modulus&, const Modulus&) noexcept = default;

 private:
  std::int64_t m_;
};

// Lee weight of a scalar: min(a, m - a). Requires 0 <= a < m.
inline std::int64_t lee_weight(std::int64_t a, const Modulus& mod) {
  if (a < 0 || a >= mod.m()) {
    throw std::domain_error("lee_weight: element " + std::to_string(a) + " not in [0, " +
                            std::to_string(mod.m()) + ")");
  }
  return std::min(a, mod.m() - a);
}

// Vector over Z_m. Entries are kept reduced to the canonical range [0, m).
class RingVector {
 public:
  RingVector(const Modulus& mod, std::vector<std::uint32_t> entries)
      : mod_(mod), entries_(std::move(entries)) {
    for (std::uint32_t e : entries_) {
      if (e >= mod_.m()) {
        throw std::domain_error("RingVector: entry " + std::to_string(e) + " not in [0, " +
                                std::to_string(mod_.m()) + ")");
      }
    }
  }

  static RingVector zeros(const Modulus& mod, std::size_t n) {
    return RingVector(Unchecked{}, mod, std::vector<std::uint32_t>(n, 0));
  }

  std::size_t size() const noexcept { return entries_.size(); }
  const Modulus& modulus() const noexcept { return mod_; }
  const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }
  std::uint32_t operator[](std::size_t i) const noexcept { return entries_[i]; }

  friend bool operator==(const RingVector&, const RingVector&) noexcept = default;

 private:
  struct Unchecked {};
  RingVector(Unchecked, const Modulus& mod, std::vector<std::uint32_t> entries) noexcept
      : mod_(mod), entries_(std::move(entries)) {}

  friend RingVector scalar_multiple(std::int64_t, const RingVector&);
  friend RingVector apply_channel(const RingVector&, const RingVector&);
  friend class SphereSampler;
  friend RingVector unchecked_ring_vector(const Modulus&, std::vector<std::uint32_t>);

  Modulus mod_;
  std::vector<std::uint32_t> entries_;
};

// Lee weight of a vector: sum of entry weights. Bounded by n * radius.
inline std::int64_t lee_weight(const RingVector& x) {
  const std::int64_t m = x.modulus().m();
  std::int64_t w = 0;
  for (std::uint32_t e : x.entries()) {
    w += std::min<std::int64_t>(e, m - e);
  }
  return w;
}

// Lee distance: Lee weight of the (componentwise) difference mod m.
inline std::int64_t lee_distance(const RingVector& x, const RingVector& y) {
  if (x.size() != y.size()) {
    throw std::domain_error("lee_distance: length mismatch");
  }
  if (!(x.modulus() == y.modulus())) {
    throw std::domain_error("lee_distance: modulus mismatch");
  }
  const std::int64_t m = x.modulus().m();
  std::int64_t w = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(x[i]) - static_cast<std::int64_t>(y[i]);
    if (d < 0) d += m;
    w += std::min(d, m - d);
  }
  return w;
}

// Componentwise product [a * x_i] mod m. Requires 0 <= a < m.
inline RingVector scalar_multiple(std::int64_t a, const RingVector& x) {
  const std::int64_t m = x.modulus().m();
  if (a < 0 || a >= m) {
    throw std::domain_error("scalar_multiple: scalar " + std::to_string(a) + " not in [0, " +
                            std::to_string(m) + ")");
  }
  std::vector<std::uint32_t> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = static_cast<std::uint32_t>((a * static_cast<std::int64_t>(x[i])) % m);
  }
  return RingVector(RingVector::Unchecked{}, x.modulus(), std::move(out));
}

// Lee weight of a * x without materializing the product.
inline std::int64_t lee_weight_of_multiple(std::int64_t a, const RingVector& x) {
  const std::int64_t m = x.modulus().m();
  if (a < 0 || a >= m) {
    throw std::domain_error("lee_weight_of_multiple: scalar out of range");
  }
  std::int64_t w = 0;
  for (std::uint32_t e : x.entries()) {
    std::int64_t p = (a * static_cast<std::int64_t>(e)) % m;
    w += std::min(p, m - p);
  }
  return w;
}

}  // namespace lee
