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

#include "bidchess/json_io.hpp"

#include "bidchess/fen.hpp"

namespace bidchess {

using nlohmann::json;

json rational_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}, {"value", q.get_d()}};
}

json move_json(const MoveValue& m) {
  json j = {{"uci", m.move.uci()},
            {"from", m.move.from.name()},
            {"to", m.move.to.name()},
            {"text", m.text},
            {"fen", emit_fen(m.result)},
            {"value", rational_json(m.value)}};
  if (m.move.promotion) j["promotion"] = *m.move.promotion == Kind::Queen ? "q" : "n";
  return j;
}

namespace {

json moves(const std::vector<MoveValue>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(move_json(m));
  return out;
}

}  // namespace

json report_json(const PositionReport& r) {
  return {{"fen", emit_fen(r.position)},
          {"value", rational_json(r.value)},
          {"classification", class_name(r.cls)},
          {"quiescence_class", class_name(r.qclass)},
          {"max_white", rational_json(r.max_white)},
          {"min_black", rational_json(r.min_black)},
          {"richman_bid_white", rational_json(r.richman_bid_white)},
          {"best_white_moves", moves(r.best_white)},
          {"best_black_moves", moves(r.best_black)},
          {"t_label", r.t_label},
          {"t_prime_label", r.t_prime_label}};
}

json options_json(const RichmanTable& t, const Position& p) {
  return {{"fen", emit_fen(p)},
          {"white", moves(option_values(t, p, Color::White))},
          {"black", moves(option_values(t, p, Color::Black))}};
}

json trace_json(const Trace& t) {
  json steps = json::array();
  for (const TraceStep& s : t.steps) {
    steps.push_back({{"mover", color_name(s.mover)}, {"uci", s.move.uci()}, {"text", s.text},
                     {"fen", emit_fen(s.after)}, {"value", rational_json(s.value)}});
  }
  json j = {{"steps", steps}, {"end", trace_end_name(t.end)}};
  if (t.end == TraceEnd::Cycle) j["cycle_start"] = t.cycle_start;
  return j;
}

}  // namespace bidchess
