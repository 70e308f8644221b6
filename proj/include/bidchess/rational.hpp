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

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bidchess {

/// Exact rational in lowest terms (GMP keeps mpq_class canonical).
using Rational = mpq_class;
using BigInt = mpz_class;

/// "num/den"; integers print as "num/1" so the form is uniform.
std::string to_string(const Rational& q);
/// Accepts "num/den" or an integer. Throws ParseError.
Rational parse_rational(std::string_view text);

/// The unique rational with the smallest denominator in the closed interval
/// [lo, hi], ties (two integers) broken toward the smaller numerator. Walks
/// the continued-fraction expansions of both endpoints. Requires
/// 0 <= lo <= hi; throws UsageError otherwise.
Rational simplest_in_interval(const Rational& lo, const Rational& hi);

/// Same, for dyadic endpoints lo_num / 2^shift and hi_num / 2^shift, without
/// canonicalizing the endpoints first.
Rational simplest_in_dyadic_interval(const BigInt& lo_num, const BigInt& hi_num, unsigned long shift);

}  // namespace bidchess
