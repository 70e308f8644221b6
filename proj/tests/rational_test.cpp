// Copyright 2026 The bidchess Authors
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

#include <random>

#include "bidchess/error.hpp"
#include "bidchess/rational.hpp"
#include "doctest.h"

using namespace bidchess;

namespace {

// Smallest denominator first, then smallest numerator.
Rational brute_simplest(const Rational& lo, const Rational& hi) {
  for (long q = 1;; ++q) {
    BigInt p = BigInt(lo * q);  // truncation; lo >= 0 so this is floor
    if (p * lo.get_den() < lo.get_num() * q) ++p;
    if (Rational(p, q) <= hi) return Rational(p, q);
  }
}

}  // namespace

TEST_CASE("simplest rational: hand examples") {
  CHECK(simplest_in_interval(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK(simplest_in_interval(Rational(3, 8), Rational(3, 8)) == Rational(3, 8));
  CHECK(simplest_in_interval(Rational(0), Rational(1)) == 0);
  CHECK(simplest_in_interval(Rational(1, 4), Rational(3, 4)) == Rational(1, 2));
  CHECK(simplest_in_interval(Rational(5, 16), Rational(11, 32)) == Rational(1, 3));
  CHECK(simplest_in_interval(Rational(3, 2), Rational(5, 2)) == 2);
  CHECK(simplest_in_dyadic_interval(5, 11, 5) == Rational(1, 3));
  CHECK(simplest_in_dyadic_interval(10, 22, 6) == Rational(1, 3));
  CHECK(simplest_in_dyadic_interval(5, 7, 5) == Rational(1, 5));
}

TEST_CASE("simplest rational matches brute force") {
  std::mt19937 rng(5);
  for (int t = 0; t < 1000; ++t) {
    Rational a(static_cast<long>(rng() % 200), static_cast<long>(1 + rng() % 50));
    Rational b(static_cast<long>(rng() % 200), static_cast<long>(1 + rng() % 50));
    a.canonicalize();
    b.canonicalize();
    if (a > b) std::swap(a, b);
    CHECK(simplest_in_interval(a, b) == brute_simplest(a, b));
  }
}

TEST_CASE("dyadic entry point matches the general one") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 500; ++t) {
    const unsigned shift = 1 + rng() % 40;
    BigInt one = BigInt(1) << shift;
    BigInt lo = BigInt(static_cast<unsigned long>(rng() % (1ul << std::min(shift, 30u))));
    BigInt hi = lo + BigInt(static_cast<unsigned long>(rng() % 1000));
    if (hi > one) hi = one;
    if (lo > hi) lo = hi;
    CHECK(simplest_in_dyadic_interval(lo, hi, shift) == simplest_in_interval(Rational(lo, one), Rational(hi, one)));
  }
}

TEST_CASE("rational text") {
  CHECK(to_string(Rational(3, 4)) == "3/4");
  CHECK(to_string(Rational(1)) == "1/1");
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(parse_rational("2") == 2);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(simplest_in_interval(Rational(1, 2), Rational(1, 3)), UsageError);
  CHECK_THROWS_AS(simplest_in_interval(Rational(-1, 2), Rational(1, 3)), UsageError);
}
