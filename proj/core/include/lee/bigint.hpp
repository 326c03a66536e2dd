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

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lee {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// num / den as a canonical rational.
inline BigRat make_rational(const BigInt& num, const BigInt& den) {
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline BigInt bigint_from_decimal(const std::string& s) {
  BigInt v;
  if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0) {
    throw std::domain_error("bigint_from_decimal: not a decimal integer: \"" + s + "\"");
  }
  return v;
}

}  // namespace lee
