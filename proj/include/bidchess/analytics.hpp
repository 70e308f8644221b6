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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bidchess/table.hpp"

namespace bidchess {

enum class PositionClass : std::uint8_t { Normal, Zugzwang, Quiescent };

std::string_view class_name(PositionClass c);

/// One option of a position with its exact successor value.
struct MoveValue {
  Move move;
  std::string text;  ///< describe_move notation
  Position result;
  Rational value;
  std::int32_t t_label = -1;
  std::int32_t t_prime_label = -1;
};

/// All options of `mover` with their values, in generation order.
std::vector<MoveValue> option_values(const RichmanTable& t, const Position& p, Color mover);

/// The x-greedy option for `mover` (maximum value for White, minimum for
/// Black); ties go to the smallest transient label of the mover's own set
/// (T for White, T' for Black; unlabeled counts as infinite), then to
/// generation order.
MoveValue greedy_option(const RichmanTable& t, const Position& p, Color mover);

struct PositionReport {
  Position position;
  Rational value;
  PositionClass cls = PositionClass::Normal;
  QuiescenceClass qclass = QuiescenceClass::None;
  Rational max_white;
  Rational min_black;
  std::vector<MoveValue> white_moves;
  std::vector<MoveValue> black_moves;
  /// Options attaining max_white / min_black.
  std::vector<MoveValue> best_white;
  std::vector<MoveValue> best_black;
  /// (max_white - min_black) / 2; negative exactly in zugzwang.
  Rational richman_bid_white;
  std::int32_t t_label = -1;
  std::int32_t t_prime_label = -1;
};

/// Throws UsageError on terminal positions, LookupError outside the table.
PositionReport report(const RichmanTable& t, const Position& p);

/// Position indices with max_w x(P_w) < x(P) < min_b x(P_b).
std::vector<std::size_t> zugzwang_census(const RichmanTable& t);

struct Factorization {
  /// Prime factors found by trial division, ascending, with multiplicity.
  std::vector<std::pair<BigInt, unsigned>> factors;
  /// What is left; 1 when fully factored.
  BigInt cofactor = 1;

  BigInt product() const;
};

/// Trial division by every prime up to `bound`. A cofactor below bound^2 is
/// prime and is moved into `factors`.
Factorization trial_factor(const BigInt& n, unsigned long bound = 10'000'000);

/// Power of 2 dividing n (n > 0).
unsigned long two_adic_valuation(const BigInt& n);

struct DenominatorCensus {
  std::string piece_set;
  /// Denominator -> number of ongoing positions with it.
  std::map<BigInt, std::size_t> denominators;
  BigInt max_denominator = 1;
  Factorization max_factors;

  /// Whether p divides some denominator of the census.
  bool divisible_somewhere(unsigned long p) const;
};

/// Over the ongoing positions of one piece set of the table.
DenominatorCensus denominator_census(const RichmanTable& t, const PieceSet& set, unsigned long trial_bound = 10'000'000);

struct PromotionChoice {
  Move move;
  std::string text;
  Rational value;
};

struct PromotionReport {
  Square from;
  /// One entry per promotion option (queen and knight per target square).
  std::vector<PromotionChoice> choices;
  /// Promotion piece of the best promotion, knight on exact ties.
  Kind preferred = Kind::Queen;
};

/// The White pawn on its seventh rank and the values of its promotions.
/// Throws UsageError if White has no pawn there or it cannot promote.
PromotionReport promotion_report(const RichmanTable& t, const Position& p);

struct SimulationResult {
  std::size_t white_wins = 0;
  std::size_t black_wins = 0;
  std::size_t unresolved = 0;
  std::size_t trials() const { return white_wins + black_wins + unresolved; }
};

/// Random-turn games with a fair coin from `p`, both sides playing
/// greedy_option. Deterministic for a given seed.
SimulationResult random_turn_simulate(const RichmanTable& t, const Position& p, std::size_t trials,
                                      std::size_t horizon = 10'000, std::uint64_t seed = 1);

struct TraceStep {
  Color mover;
  Move move;
  std::string text;
  Position after;
  Rational value;
};

enum class TraceEnd : std::uint8_t { WhiteWon, BlackWon, Cycle, CoinsExhausted };

std::string_view trace_end_name(TraceEnd e);

struct Trace {
  std::vector<TraceStep> steps;
  TraceEnd end = TraceEnd::CoinsExhausted;
  /// For cycles: index into steps of the first repeated state.
  std::size_t cycle_start = 0;
};

/// Greedy play under a prescribed coin sequence of 'W' and 'B'. A trailing
/// '*' repeats the whole sequence forever; then a repeated (position, coin
/// phase) state is reported as a cycle.
Trace forced_sequence_trace(const RichmanTable& t, const Position& p, std::string_view coins);

}  // namespace bidchess
