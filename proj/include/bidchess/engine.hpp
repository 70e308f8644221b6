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

#include <cstdint>
#include <json.hpp>

#include "bidchess/analytics.hpp"
#include "bidchess/session.hpp"
#include "bidchess/table.hpp"

namespace bidchess {

/// What the acting side of a session should do next.
struct EngineAction {
  enum class Type : std::uint8_t { Bid, Choice, Move };
  Type type = Type::Bid;
  std::int64_t bid = 0;
  bool accept = true;
  Move move;
  /// Exact inputs behind the decision, for logs and advice.
  nlohmann::json rationale;
};

/// Nearest integer to bid * chips_total (halves toward zero), clamped to
/// [-chips, chips].
std::int64_t discrete_bid(const Rational& bid, std::int64_t chips_total, std::int64_t chips);

/// The continuous-money heuristic for the side whose phase it is:
///  - bid: the Richman bid (max_w - min_b) / 2 scaled to chips;
///  - choice: the affordable branch leaving the engine the larger share
///    above its winning threshold after the opponent's (accept) or its own
///    (reject) greedy move; ties accept;
///  - move: greedy_option.
/// A pure function of table and session. Throws UsageError once the session
/// is over.
EngineAction engine_policy(const RichmanTable& t, const GameSession& s);

/// Performs `a` as the session's current actor.
void apply_action(GameSession& s, const EngineAction& a);

}  // namespace bidchess
