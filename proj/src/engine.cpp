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

#include "bidchess/engine.hpp"

#include <algorithm>

#include "bidchess/error.hpp"

namespace bidchess {

using nlohmann::json;

std::int64_t discrete_bid(const Rational& bid, std::int64_t chips_total, std::int64_t chips) {
  const Rational scaled = bid * Rational(chips_total);
  // round half toward zero on the magnitude
  const Rational mag = abs(scaled);
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), mag.get_num().get_mpz_t(), mag.get_den().get_mpz_t());
  if (2 * r > mag.get_den()) ++q;
  if (q > chips) q = chips;
  const std::int64_t out = q.get_si();
  return scaled < 0 ? -out : out;
}

namespace {

// Share of the chips the engine needs to strictly exceed to win from a
// position of White-value x.
Rational threshold(Color side, const Rational& x) { return side == Color::White ? 1 - x : x; }

json rat(const Rational& q) { return to_string(q); }

}  // namespace

EngineAction engine_policy(const RichmanTable& t, const GameSession& s) {
  if (s.over()) throw UsageError("the session is over");
  const Color me = s.actor();
  const Position& p = s.position();
  EngineAction a;
  switch (s.phase()) {
    case Phase::AwaitingBid: {
      const PositionReport r = report(t, p);
      a.type = EngineAction::Type::Bid;
      a.bid = discrete_bid(r.richman_bid_white, s.chips_total(), s.chips(me));
      a.rationale = {{"richman_bid", rat(r.richman_bid_white)}, {"max_white", rat(r.max_white)}, {"min_black", rat(r.min_black)}};
      break;
    }
    case Phase::AwaitingChoice: {
      const std::int64_t b = *s.pending_bid();
      const Color bidder = s.last_mover();
      const Rational total(s.chips_total());
      // accept: the bidder pays b to me and moves
      const MoveValue theirs = greedy_option(t, p, bidder);
      const Rational margin_accept = Rational(s.chips(me) + b) / total - threshold(me, theirs.value);
      // reject: I pay b and move
      const MoveValue mine = greedy_option(t, p, me);
      const Rational margin_reject = Rational(s.chips(me) - b) / total - threshold(me, mine.value);
      const bool can_a = s.can_accept(b);
      const bool can_r = s.can_reject(b);
      a.type = EngineAction::Type::Choice;
      a.accept = can_a && (!can_r || margin_accept >= margin_reject);
      a.rationale = {{"margin_accept", rat(margin_accept)}, {"margin_reject", rat(margin_reject)},
                     {"can_accept", can_a}, {"can_reject", can_r}};
      break;
    }
    case Phase::AwaitingMove: {
      const MoveValue m = greedy_option(t, p, me);
      a.type = EngineAction::Type::Move;
      a.move = m.move;
      a.rationale = {{"value", rat(m.value)}, {"text", m.text}};
      break;
    }
    default:
      throw UsageError("the session is over");
  }
  return a;
}

void apply_action(GameSession& s, const EngineAction& a) {
  const Color me = s.actor();
  switch (a.type) {
    case EngineAction::Type::Bid: s.bid(me, a.bid); break;
    case EngineAction::Type::Choice: s.choose(me, a.accept); break;
    case EngineAction::Type::Move: s.move(me, a.move); break;
  }
}

}  // namespace bidchess
