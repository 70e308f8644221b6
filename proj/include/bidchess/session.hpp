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
#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bidchess/board.hpp"

namespace bidchess {

/// Open bidding protocol. The player who made the last move bids an integer
/// b in [-n, n] (n = their chips) for the next move; the other player either
/// accepts (the bidder pays b and moves) or rejects (the chooser pays b and
/// moves). Negative amounts flow the other way. Black counts as the last
/// mover at the start. Whoever holds the choice wins ties: paying exactly
/// the bid is enough to take the move.
enum class Phase : std::uint8_t { AwaitingBid, AwaitingChoice, AwaitingMove, Finished, Unresolved };

std::string_view phase_name(Phase p);

class GameSession {
 public:
  /// Throws UsageError on a terminal start, chips_total < 1 or white_chips
  /// outside [0, chips_total].
  GameSession(std::string id, Position start, std::int64_t chips_total, std::int64_t white_chips, Color human_side,
              std::size_t ply_cap = 10'000);

  const std::string& id() const { return id_; }
  const Position& position() const { return position_; }
  Phase phase() const { return phase_; }
  bool over() const { return phase_ == Phase::Finished || phase_ == Phase::Unresolved; }
  /// Who must act in the current phase; throws UsageError once over.
  Color actor() const;
  Color human_side() const { return human_; }
  Color engine_side() const { return opponent(human_); }
  Color last_mover() const { return last_mover_; }
  std::int64_t chips_total() const { return total_; }
  std::int64_t chips(Color c) const { return c == Color::White ? white_ : total_ - white_; }
  /// The pending bid while AwaitingChoice.
  std::optional<std::int64_t> pending_bid() const { return bid_; }
  std::optional<Color> winner() const;
  std::size_t plies() const { return plies_; }
  const std::vector<nlohmann::json>& history() const { return history_; }

  /// Whether the chooser can afford each branch for bid `b`.
  bool can_accept(std::int64_t b) const;
  bool can_reject(std::int64_t b) const;

  /// Each throws ProtocolError when the action is not allowed now.
  void bid(Color who, std::int64_t amount);
  void choose(Color who, bool accept);
  void move(Color who, const Move& m);

  nlohmann::json to_json() const;

 private:
  void record(nlohmann::json event);
  void require(Phase p, Color who) const;
  void transfer(Color from, std::int64_t amount);

  std::string id_;
  Position position_;
  std::int64_t total_;
  std::int64_t white_;
  Color human_;
  std::size_t ply_cap_;
  Phase phase_ = Phase::AwaitingBid;
  Color last_mover_ = Color::Black;
  Color mover_ = Color::White;
  std::optional<std::int64_t> bid_;
  std::size_t plies_ = 0;
  std::vector<nlohmann::json> history_;
};

}  // namespace bidchess
