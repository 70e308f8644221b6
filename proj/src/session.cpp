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

#include "bidchess/session.hpp"

#include "bidchess/error.hpp"
#include "bidchess/fen.hpp"

namespace bidchess {

using nlohmann::json;

std::string_view phase_name(Phase p) {
  switch (p) {
    case Phase::AwaitingBid: return "AwaitingBid";
    case Phase::AwaitingChoice: return "AwaitingChoice";
    case Phase::AwaitingMove: return "AwaitingMove";
    case Phase::Finished: return "Finished";
    case Phase::Unresolved: return "Unresolved";
  }
  return "?";
}

GameSession::GameSession(std::string id, Position start, std::int64_t chips_total, std::int64_t white_chips,
                         Color human_side, std::size_t ply_cap)
    : id_(std::move(id)), position_(std::move(start)), total_(chips_total), white_(white_chips), human_(human_side),
      ply_cap_(ply_cap) {
  if (!position_.ongoing()) throw UsageError("a session needs an ongoing position");
  if (total_ < 1) throw UsageError("chips_total must be at least 1");
  if (white_ < 0 || white_ > total_) throw UsageError("white_chips must lie in [0, chips_total]");
  record({{"event", "start"}, {"fen", emit_fen(position_)}, {"white_chips", white_}, {"black_chips", total_ - white_}});
}

Color GameSession::actor() const {
  switch (phase_) {
    case Phase::AwaitingBid: return last_mover_;
    case Phase::AwaitingChoice: return opponent(last_mover_);
    case Phase::AwaitingMove: return mover_;
    default: throw UsageError("the session is over");
  }
}

std::optional<Color> GameSession::winner() const {
  switch (position_.status()) {
    case Status::WhiteWon: return Color::White;
    case Status::BlackWon: return Color::Black;
    default: return std::nullopt;
  }
}

bool GameSession::can_accept(std::int64_t b) const {
  // a negative bid is paid by the chooser
  return b >= 0 || chips(opponent(last_mover_)) >= -b;
}

bool GameSession::can_reject(std::int64_t b) const {
  return b <= 0 || chips(opponent(last_mover_)) >= b;
}

void GameSession::require(Phase p, Color who) const {
  if (phase_ != p) {
    throw ProtocolError("expected " + std::string(phase_name(phase_)) + " action, not " + std::string(phase_name(p)));
  }
  if (who != actor()) throw ProtocolError(std::string(color_name(who)) + " cannot act now");
}

void GameSession::transfer(Color from, std::int64_t amount) {
  // amount may be negative: then the flow reverses
  if (from == Color::White) {
    white_ -= amount;
  } else {
    white_ += amount;
  }
  if (white_ < 0 || white_ > total_) throw std::logic_error("chip transfer broke conservation");
}

void GameSession::bid(Color who, std::int64_t amount) {
  require(Phase::AwaitingBid, who);
  const std::int64_t n = chips(who);
  if (amount < -n || amount > n) {
    throw ProtocolError("bid " + std::to_string(amount) + " outside [-" + std::to_string(n) + ", " + std::to_string(n) + "]");
  }
  bid_ = amount;
  phase_ = Phase::AwaitingChoice;
  record({{"event", "bid"}, {"by", color_name(who)}, {"amount", amount}});
}

void GameSession::choose(Color who, bool accept) {
  require(Phase::AwaitingChoice, who);
  const std::int64_t b = *bid_;
  if (accept ? !can_accept(b) : !can_reject(b)) {
    throw ProtocolError(std::string(accept ? "accepting" : "rejecting") + " a bid of " + std::to_string(b) +
                        " is not affordable");
  }
  const Color bidder = last_mover_;
  if (accept) {
    transfer(bidder, b);
    mover_ = bidder;
  } else {
    transfer(who, b);
    mover_ = who;
  }
  bid_.reset();
  phase_ = Phase::AwaitingMove;
  record({{"event", accept ? "accept" : "reject"},
          {"by", color_name(who)},
          {"amount", b},
          {"mover", color_name(mover_)},
          {"white_chips", white_},
          {"black_chips", total_ - white_}});
}

void GameSession::move(Color who, const Move& m) {
  require(Phase::AwaitingMove, who);
  if (m.mover != who) throw ProtocolError("move is tagged with the wrong colour");
  Position next = [&] {
    try {
      return apply_move(position_, m);
    } catch (const UsageError& e) {
      throw ProtocolError(std::string("illegal move: ") + e.what());
    }
  }();
  const std::string text = describe_move(position_, m);
  position_ = std::move(next);
  last_mover_ = who;
  ++plies_;
  if (!position_.ongoing()) {
    phase_ = Phase::Finished;
  } else if (plies_ >= ply_cap_) {
    phase_ = Phase::Unresolved;
  } else {
    phase_ = Phase::AwaitingBid;
  }
  record({{"event", "move"}, {"by", color_name(who)}, {"move", m.uci()}, {"text", text}, {"fen", emit_fen(position_)}});
  if (phase_ == Phase::Finished) record({{"event", "finished"}, {"winner", color_name(*winner())}});
  if (phase_ == Phase::Unresolved) record({{"event", "unresolved"}, {"plies", plies_}});
}

void GameSession::record(json event) {
  event["seq"] = history_.size();
  history_.push_back(std::move(event));
}

json GameSession::to_json() const {
  json j = {
      {"id", id_},
      {"fen", emit_fen(position_)},
      {"dims", position_.dims().to_string()},
      {"status", status_name(position_.status())},
      {"phase", phase_name(phase_)},
      {"chips_total", total_},
      {"chips", {{"white", white_}, {"black", total_ - white_}}},
      {"human_side", color_name(human_)},
      {"engine_side", color_name(engine_side())},
      {"last_mover", color_name(last_mover_)},
      {"plies", plies_},
      {"history", history_},
  };
  if (!over()) j["actor"] = color_name(actor());
  if (bid_) j["pending_bid"] = *bid_;
  if (phase_ == Phase::AwaitingMove) j["mover"] = color_name(mover_);
  if (auto w = winner()) j["winner"] = color_name(*w);
  return j;
}

}  // namespace bidchess
