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

#include <doctest.h>

#include "skewroot/cyclo.hpp"
#include "skewroot/errors.hpp"

using namespace skw;

namespace {
std::vector<Rat> rats(std::initializer_list<long> vals) {
  std::vector<Rat> out;
  for (long v : vals) out.emplace_back(static_cast<signed long>(v));
  return out;
}
}  // namespace

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(3) == 2);
  CHECK(euler_phi(4) == 2);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(60) == 16);
}

TEST_CASE("cyclotomic polynomials match hand-computed tables") {
  CHECK(cyclotomic_poly(1) == rats({-1, 1}));
  CHECK(cyclotomic_poly(2) == rats({1, 1}));
  CHECK(cyclotomic_poly(3) == rats({1, 1, 1}));
  CHECK(cyclotomic_poly(4) == rats({1, 0, 1}));
  CHECK(cyclotomic_poly(6) == rats({1, -1, 1}));
  CHECK(cyclotomic_poly(8) == rats({1, 0, 0, 0, 1}));
  CHECK(cyclotomic_poly(12) == rats({1, 0, -1, 0, 1}));
}

TEST_CASE("roots of unity reduce into the power basis") {
  // z_4^2 = -1
  CHECK(CycloNum::root(4, 1) * CycloNum::root(4, 1) == CycloNum::integer(-1));
  // 1 + z_3 + z_3^2 = 0
  const CycloNum z3 = CycloNum::root(3, 1);
  CHECK((CycloNum::one() + z3 + z3 * z3).is_zero());
  // z_3^2 has coordinates (-1,-1) in basis {1, z_3}
  CHECK(CycloNum::root(3, 2).coeffs() == rats({-1, -1}));
  // z_8^4 = -1, z_8^8 = 1
  CHECK(CycloNum::root(8, 1).pow(4) == CycloNum::integer(-1));
  CHECK(CycloNum::root(8, 1).pow(8) == CycloNum::one());
  // negative exponents wrap
  CHECK(CycloNum::root(5, -6) == CycloNum::root(5, 4));
}

TEST_CASE("multiplicative order of z_N^k is N/gcd(N,k)") {
  for (long n : {2L, 3L, 4L, 6L, 8L, 12L}) {
    for (long k = 0; k < n; ++k) {
      const CycloNum z = CycloNum::root(n, k);
      const long ord = n / gcd_long(n, k == 0 ? n : k);
      CHECK(z.pow(ord) == CycloNum::one());
      for (long d = 1; d < ord; ++d) CHECK(z.pow(d) != CycloNum::one());
    }
  }
}

TEST_CASE("inverse of z_8 is -z_8^3 in the power basis") {
  const CycloNum inv = CycloNum::root(8, 1).inv();
  CHECK(inv == CycloNum::root(8, 7));
  CHECK(inv.coeffs() == rats({0, 0, 0, -1}));
  CHECK(CycloNum::root(8, 1) * inv == CycloNum::one());
}

TEST_CASE("division and zero handling") {
  const CycloNum z = CycloNum::root(12, 5);
  CHECK(z / z == CycloNum::one(12));
  CHECK_THROWS_AS(CycloNum::zero(4).inv(), DivisionByZero);
  CHECK_THROWS_AS(z / CycloNum::zero(12), DivisionByZero);
}

TEST_CASE("embedding into a larger conductor is a ring homomorphism") {
  // z_2 -> z_6^3 = -1
  CHECK(CycloNum::root(2, 1).embedded(6) == CycloNum::integer(-1));
  // z_3 -> z_6^2, coordinates (-1,1) in basis {1, z_6}
  CHECK(CycloNum::root(3, 1).embedded(6) == CycloNum::root(6, 2));
  CHECK(CycloNum::root(3, 1).embedded(6).coeffs() == rats({-1, 1}));
  // additive and multiplicative compatibility on a sample
  const CycloNum a = CycloNum::root(4, 1) + CycloNum::integer(2);
  const CycloNum b = CycloNum::root(4, 3) - CycloNum::one();
  CHECK((a * b).embedded(12) == a.embedded(12) * b.embedded(12));
  CHECK((a + b).embedded(12) == a.embedded(12) + b.embedded(12));
  CHECK_THROWS_AS(CycloNum::root(4, 1).embedded(6), IncompatibleOrders);
}

TEST_CASE("mixed-order arithmetic lifts to the lcm") {
  // z_4 * z_3 = z_12^7 (z_4 = z_12^3, z_3 = z_12^4)
  CHECK(CycloNum::root(4, 1) * CycloNum::root(3, 1) == CycloNum::root(12, 7));
  // equality sees through conductors: z_12^8 = z_3^2
  CHECK(CycloNum::root(12, 8) == CycloNum::root(3, 2));
  CHECK(CycloNum::root(12, 8) != CycloNum::root(3, 1));
  // z_6 = -z_3^2
  CHECK(CycloNum::root(6, 1) == -CycloNum::root(3, 2));
}

TEST_CASE("rational detection in the power basis") {
  Rat value;
  CHECK(CycloNum::root(2, 1).is_rational(&value));
  CHECK(value == -1);
  CHECK(CycloNum::rational(Rat(3, 4), 8).is_rational(&value));
  CHECK(value == Rat(3, 4));
  CHECK_FALSE(CycloNum::root(8, 1).is_rational());
}

TEST_CASE("canonical text round trip") {
  const CycloNum x = CycloNum::from_coeffs(
      8, {Rat(1, 2), Rat(0), Rat(-3, 4), Rat(5)});
  CHECK(x.to_string() == "8:[1/2,0/1,-3/4,5/1]");
  CHECK(CycloNum::parse(x.to_string()) == x);
  CHECK(CycloNum::parse("1:[7/2]") == CycloNum::rational(Rat(7, 2)));
  // accepts bare integers and un-normalized fractions on input
  CHECK(CycloNum::parse("4:[2,3/-6]") ==
        CycloNum::from_coeffs(4, {Rat(2), Rat(-1, 2)}));
}

TEST_CASE("parse rejects malformed scalars") {
  CHECK_THROWS_AS(CycloNum::parse("4:[1/1]"), ParseError);        // wrong arity
  CHECK_THROWS_AS(CycloNum::parse("x:[1/1]"), ParseError);        // bad order
  CHECK_THROWS_AS(CycloNum::parse("4:1/1,0/1"), ParseError);      // missing brackets
  CHECK_THROWS_AS(CycloNum::parse("4:[1/0,0/1]"), ParseError);    // zero denominator
  CHECK_THROWS_AS(CycloNum::parse("4:[a,b]"), ParseError);        // not rationals
  CHECK_THROWS_AS(CycloNum::parse("0:[]"), ParseError);           // order < 1
}

TEST_CASE("root_exponent recovers exponents and rejects non-roots") {
  CHECK(root_exponent(CycloNum::one(), 5) == 0);
  CHECK(root_exponent(CycloNum::integer(-1), 4) == 2);
  CHECK(root_exponent(CycloNum::root(3, 2), 6) == 4);
  CHECK(root_exponent(CycloNum::root(8, 3), 8) == 3);
  CHECK_FALSE(root_exponent(CycloNum::integer(2), 4).has_value());
  CHECK_FALSE(root_exponent(CycloNum::root(8, 1), 4).has_value());
}
