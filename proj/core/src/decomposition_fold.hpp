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

// Walks the decomposition classes of one Lee sphere with exact class sizes.
//
// A class is a partition of t with parts in [1, r] and length at most n,
// stored as occurrence counts n_v (parts equal to v). Its size is
//
//   2^(len - [m even] * n_r) * n! / (n_0! * n_1! * ... * n_r!),
//
// with n_0 = n - len zero positions. The walk visits classes in decreasing
// lexicographic order of the partition, which is the descending odometer
// order of (n_r, ..., n_2); n_1 is implied. Class sizes are maintained
// incrementally: one step of the innermost counter changes the size by the
// small exact ratio 2 * n_2 * n_0 / ((n_1 + 1) (n_1 + 2)), and each prefix
// change recomputes only one binomial factor.

#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "lee/bigint.hpp"
#include "lee/core.hpp"

namespace lee::detail {

// Chunks split the walk by the leading counter n_r; chunk index c covers
// n_r = (t / r) - c. Spheres with radius 1 or t = 0 form a single chunk.
inline std::int64_t fold_chunk_count(const Modulus& mod, std::int64_t t) {
  if (t <= 0 || mod.radius() < 2) return 1;
  return t / mod.radius() + 1;
}

template <class Visit>
class DecompositionFold {
 public:
  DecompositionFold(std::int64_t n, const Modulus& mod, std::int64_t t, Visit& visit)
      : n_(n), t_(t), r_(mod.radius()), even_(mod.is_even()), visit_(visit) {
    counts_.assign(static_cast<std::size_t>(r_) + 1, 0);
  }

  // chunk < 0 walks everything. Returns false iff the visitor stopped.
  bool run(std::int64_t chunk) {
    if (t_ == 0) {
      // The zero vector forms the single empty class.
      if (n_ < 0 || chunk > 0) return true;
      one_ = 1;
      return visit_(std::span<const std::int64_t>(counts_), one_);
    }
    if (r_ == 1) {
      // Only (1, 1, ..., 1) remains; for even m (m = 2) signs collapse.
      if (t_ > n_ || chunk > 0) return true;
      counts_[1] = t_;
      one_ = binomial(n_, t_);
      if (!even_) mpz_mul_2exp(one_.get_mpz_t(), one_.get_mpz_t(), static_cast<mp_bitcnt_t>(t_));
      bool keep = visit_(std::span<const std::int64_t>(counts_), one_);
      counts_[1] = 0;
      return keep;
    }
    pm_one_ = 1;
    if (r_ == 2) return inner(0, t_, pm_one_, chunk);
    return level(r_, 0, t_, pm_one_, chunk);
  }

 private:
  static std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

  // Chooses n_v for part value v >= 3 (descending), then recurses.
  // s_above: parts already placed with values > v; rem: weight left for
  // values <= v; pm_parent: binomial product over the placed values.
  bool level(std::int64_t v, std::int64_t s_above, std::int64_t rem, const mpz_class& pm_parent,
             std::int64_t chunk) {
    if (v == 2) return inner(s_above, rem, pm_parent, -1);
    const std::int64_t hi = rem / v;
    std::int64_t first = hi;
    std::int64_t last = 0;
    if (v == r_ && chunk >= 0) {
      first = hi - chunk;
      last = first;
      if (first < 0) return true;
    }
    const std::int64_t pool = n_ - s_above;  // positions not yet used by larger parts
    mpz_class pm;
    for (std::int64_t nv = first; nv >= last; --nv) {
      // Smallest reachable length: everything below v packed as densely as
      // possible. Grows as nv shrinks, so the loop can stop early.
      const std::int64_t rem_below = rem - v * nv;
      if (s_above + nv + ceil_div(rem_below, v - 1) > n_) break;
      if (nv == first) {
        pm = pm_parent * binomial(pool, nv);
      } else {
        // C(pool, nv) from C(pool, nv + 1).
        mpz_mul_ui(pm.get_mpz_t(), pm.get_mpz_t(), static_cast<unsigned long>(nv + 1));
        mpz_divexact_ui(pm.get_mpz_t(), pm.get_mpz_t(), static_cast<unsigned long>(pool - nv));
      }
      counts_[static_cast<std::size_t>(v)] = nv;
      if (v == r_) nr_ = nv;
      if (!level(v - 1, s_above + nv, rem_below, pm, chunk)) {
        counts_[static_cast<std::size_t>(v)] = 0;
        return false;
      }
    }
    counts_[static_cast<std::size_t>(v)] = 0;
    return true;
  }

  // Innermost counter: n_2 descending; n_1 = rem - 2 * n_2 is implied. When
  // the radius itself is 2 (m = 4 or 5), n_2 is also the leading counter:
  // chunk >= 0 then restricts the run to one value, and for m = 4 the sign
  // exponent loses one power of two per radius part.
  bool inner(std::int64_t s, std::int64_t rem, const mpz_class& pm, std::int64_t chunk) {
    std::int64_t hi = rem / 2;
    std::int64_t lo = std::max<std::int64_t>(0, s + rem - n_);
    if (r_ == 2 && chunk >= 0) {
      const std::int64_t wanted = rem / 2 - chunk;
      hi = std::min(hi, wanted);
      lo = std::max(lo, wanted);
    }
    if (hi < lo) return true;

    const bool radius_run = (r_ == 2);
    std::int64_t n2 = hi;
    std::int64_t n1 = rem - 2 * n2;
    std::int64_t len = s + n2 + n1;
    const std::int64_t pool = n_ - s;

    // Class size at the top of the run; later steps use the small ratio.
    // n1 exceeds 1 only when a chunk restriction clips the run.
    cnt_ = pm * binomial(pool, n2);
    if (n1 > 0) cnt_ *= binomial(pool - n2, n1);
    const std::int64_t exponent = len - (even_ ? (radius_run ? n2 : nr_) : 0);
    assert(exponent >= 0);
    mpz_mul_2exp(cnt_.get_mpz_t(), cnt_.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));

    // Stepping n_2 down by one raises the exponent by one more when the
    // radius-part count itself shrinks (even m with r = 2).
    const unsigned long two = (even_ && radius_run) ? 4ul : 2ul;

    for (;;) {
      counts_[2] = n2;
      counts_[1] = n1;
      if (!visit_(std::span<const std::int64_t>(counts_), cnt_)) {
        counts_[2] = counts_[1] = 0;
        return false;
      }
      if (n2 == lo) break;
      const unsigned long num =
          two * static_cast<unsigned long>(n2) * static_cast<unsigned long>(n_ - len);
      const unsigned long den =
          static_cast<unsigned long>(n1 + 1) * static_cast<unsigned long>(n1 + 2);
      mpz_mul_ui(cnt_.get_mpz_t(), cnt_.get_mpz_t(), num);
      mpz_divexact_ui(cnt_.get_mpz_t(), cnt_.get_mpz_t(), den);
      --n2;
      n1 += 2;
      ++len;
    }
    counts_[2] = counts_[1] = 0;
    return true;
  }

  std::int64_t n_;
  std::int64_t t_;
  std::int64_t r_;
  bool even_;
  Visit& visit_;
  std::vector<std::int64_t> counts_;
  std::int64_t nr_ = 0;
  mpz_class cnt_;
  mpz_class one_;
  mpz_class pm_one_;
};

// visit(count_by_value, class_size) -> bool (false stops). chunk < 0: all.
template <class Visit>
bool fold_decompositions(std::int64_t n, const Modulus& mod, std::int64_t t, std::int64_t chunk,
                         Visit&& visit) {
  DecompositionFold<Visit> fold(n, mod, t, visit);
  return fold.run(chunk);
}

}  // namespace lee::detail
