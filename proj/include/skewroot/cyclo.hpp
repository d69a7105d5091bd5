// Copyright 2026 The skewroot authors
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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewroot/rational.hpp"

namespace skw {

long gcd_long(long a, long b);
long lcm_long(long a, long b);

// Euler phi, by trial-division factorization. Fine for the orders that show
// up here (exponents of small finite groups).
long euler_phi(long n);

// Coefficients of the N-th cyclotomic polynomial, degree phi(N), monic,
// index i = coefficient of x^i. Computed once per N and cached.
const std::vector<Rat>& cyclotomic_poly(long n);

// Element of the cyclotomic field of conductor `order`, stored as a vector
// of phi(order) rational coordinates in the power basis 1, z, ..., z^{phi-1}
// with z a fixed primitive `order`-th root of unity. Arithmetic between
// elements of different orders lifts both to the lcm first; lifting is the
// ring embedding z_N -> z_M^{M/N}, which is only defined when N | M.
class CycloNum {
 public:
  // Zero of the rational field (order 1).
  CycloNum();

  static CycloNum zero(long order = 1);
  static CycloNum one(long order = 1);
  // z_order^k, k arbitrary (reduced mod order).
  static CycloNum root(long order, long k);
  static CycloNum rational(const Rat& value, long order = 1);
  static CycloNum integer(long value, long order = 1);
  // Coefficients must have length phi(order).
  static CycloNum from_coeffs(long order, std::vector<Rat> coeffs);

  long order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  // True when the element lies in the prime field; then *out is its value.
  bool is_rational(Rat* out = nullptr) const;

  // Image in the field of conductor `order2`. Requires order() | order2.
  CycloNum embedded(long order2) const;

  CycloNum operator-() const;
  CycloNum inv() const;  // throws DivisionByZero on zero
  CycloNum pow(long e) const;

  friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b);
  CycloNum& operator+=(const CycloNum& b);
  CycloNum& operator-=(const CycloNum& b);
  CycloNum& operator*=(const CycloNum& b);

  // Mathematical equality: both sides are lifted to the lcm of their orders
  // and compared coordinate-wise there.
  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b);

  // Canonical text form "N:[c0,c1,...]" with rational entries "p/q".
  std::string to_string() const;
  static CycloNum parse(std::string_view text);

 private:
  long order_;
  std::vector<Rat> coeffs_;
};

// If v equals z_order^k for some k, returns that k in [0, order); otherwise
// nullopt. Used to read exponents back out of black-box scalar tables.
std::optional<long> root_exponent(const CycloNum& v, long order);

}  // namespace skw
