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

#include "bidchess/rational.hpp"

#include "bidchess/error.hpp"

namespace bidchess {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw ParseError("bad rational '" + s + "'");
  }
  q.canonicalize();
  return q;
}

namespace {

// Simplest rational in [a/b, c/d] with 0 <= a/b <= c/d, b, d > 0.
//
// Each round either finds an integer in the interval (ceil of the lower end)
// or peels off the common integer part t and continues with the reciprocal
// interval [d/(c - t d), b/(a - t b)]. The convergents of the emitted terms
// give the answer.
Rational simplest(BigInt a, BigInt b, BigInt c, BigInt d) {
  BigInt p_prev = 1, q_prev = 0;  // convergent k-1
  BigInt p_prev2 = 0, q_prev2 = 1;  // convergent k-2
  BigInt t, r, ceil_lo;
  for (;;) {
    mpz_fdiv_qr(t.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    ceil_lo = (r == 0) ? t : BigInt(t + 1);
    // ceil(a/b) <= c/d  <=>  ceil_lo * d <= c
    if (ceil_lo * d <= c) {
      BigInt p = ceil_lo * p_prev + p_prev2;
      BigInt q = ceil_lo * q_prev + q_prev2;
      Rational out(p, q);
      out.canonicalize();
      return out;
    }
    // Both ends lie strictly inside (t, t + 1).
    BigInt p = t * p_prev + p_prev2;
    BigInt q = t * q_prev + q_prev2;
    p_prev2 = std::move(p_prev);
    q_prev2 = std::move(q_prev);
    p_prev = std::move(p);
    q_prev = std::move(q);
    // new interval: [d / (c - t d), b / (a - t b)]
    BigInt na = d;
    BigInt nb = c - t * d;
    BigInt nc = b;
    BigInt nd = r;  // a - t b
    a = std::move(na);
    b = std::move(nb);
    c = std::move(nc);
    d = std::move(nd);
  }
}

}  // namespace

Rational simplest_in_interval(const Rational& lo, const Rational& hi) {
  if (lo < 0) throw UsageError("simplest_in_interval: lower end is negative");
  if (lo > hi) throw UsageError("simplest_in_interval: empty interval " + to_string(lo) + " > " + to_string(hi));
  return simplest(lo.get_num(), lo.get_den(), hi.get_num(), hi.get_den());
}

Rational simplest_in_dyadic_interval(const BigInt& lo_num, const BigInt& hi_num, unsigned long shift) {
  if (lo_num < 0) throw UsageError("simplest_in_interval: lower end is negative");
  if (lo_num > hi_num) throw UsageError("simplest_in_interval: empty interval");
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, shift);
  return simplest(lo_num, den, hi_num, den);
}

}  // namespace bidchess
