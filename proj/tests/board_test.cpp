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

#include <algorithm>
#include <random>
#include <set>

#include "bidchess/board.hpp"
#include "bidchess/error.hpp"
#include "bidchess/fen.hpp"
#include "doctest.h"

using namespace bidchess;

namespace {

const char* kFig1 = "8x8/3k3R/8/3K4/8/8/8/8/8";
const char* kFig2 = "8x8/8/8/8/5k2/8/8/2K5/8";

std::set<std::string> result_fens(const std::vector<Option>& opts) {
  std::set<std::string> out;
  for (const Option& o : opts) out.insert(emit_fen(o.result));
  return out;
}

std::set<std::string> destinations(const std::vector<Option>& opts, Square from) {
  std::set<std::string> out;
  for (const Option& o : opts) {
    if (o.move.from == from) out.insert(o.move.to.name());
  }
  return out;
}

}  // namespace

TEST_CASE("fen round trip and terminal encoding") {
  const Position fig1 = parse_fen(kFig1);
  CHECK(fig1.ongoing());
  CHECK(fig1.piece_count() == 3);
  CHECK(*fig1.at(Square::parse("d6", fig1.dims())) == Piece{Color::White, Kind::King});
  CHECK(*fig1.at(Square::parse("h8", fig1.dims())) == Piece{Color::White, Kind::Rook});
  CHECK(*fig1.at(Square::parse("d8", fig1.dims())) == Piece{Color::Black, Kind::King});
  CHECK(emit_fen(fig1) == kFig1);
  
  const Position won = parse_fen("8x8/3R4/8/3K4/8/8/8/8/8");
  CHECK(won.status() == Status::WhiteWon);
  CHECK(emit_fen(won) == "8x8/3R4/8/3K4/8/8/8/8/8");

  const Position small = parse_fen("3x4/2k/3/3/K1N");
  CHECK(small.dims() == BoardDims{3, 4});
  CHECK(emit_fen(small) == "3x4/2k/3/3/K1N");
}

TEST_CASE("fen errors") {
  CHECK_THROWS_AS(parse_fen("4x4/3k/8/4/K3"), ParseError);      // gap wider than the board
  CHECK_THROWS_AS(parse_fen("8x8/8/8"), ParseError);            // too few ranks
  CHECK_THROWS_AS(parse_fen("8x8/K6K/8/8/8/8/8/8/k7"), ParseError);  // duplicate kings
  CHECK_THROWS_AS(parse_fen("9x8/8/8/8/8/8/8/8/8"), ParseError);
  CHECK_THROWS_AS(parse_fen("8x8/P6k/8/8/8/8/8/8/K7"), ParseError);  // pawn on the last rank
  CHECK_THROWS_AS(parse_fen("4x4/4/4/4/4"), ParseError);        // no kings
  CHECK_THROWS_AS(parse_fen("4x4/k2x/4/4/K3"), ParseError);
}

TEST_CASE("rook threatens the king in the 3/4 position") {
  const Position p = parse_fen(kFig1);
  const auto white = white_options(p);
  bool capture = false;
  for (const Option& o : white) {
    if (o.move.from.name() == "h8" && o.move.to.name() == "d8") {
      capture = true;
      CHECK(o.result.status() == Status::WhiteWon);
    }
  }
  CHECK(capture);
  // the black king's only moves; d6 adjacency is legal without a check rule
  const auto black = black_options(p);
  CHECK(destinations(black, Square::parse("d8", p.dims())) == std::set<std::string>{"c7", "d7", "e7", "c8", "e8"});
}

TEST_CASE("bare kings have eight steps each from the interior") {
  const Position p = parse_fen(kFig2);
  CHECK(white_options(p).size() == 8);
  CHECK(black_options(p).size() == 8);
}

TEST_CASE("pawn pushes, double step and capture") {
  const Position p = parse_fen("8x8/2k5/8/8/4K3/8/8/1P6/8");
  const auto dests = destinations(white_options(p), Square::parse("b2", p.dims()));
  CHECK(dests == std::set<std::string>{"b3", "b4"});
  const Position b4 = apply_move(p, Move{Color::White, Square::parse("b2", p.dims()), Square::parse("b4", p.dims()), {}});
  CHECK(*b4.at(Square::parse("b4", p.dims())) == Piece{Color::White, Kind::Pawn});

  // on a three-rank board the first push already promotes
  const Position short_board = parse_fen("4x3/k3/1P2/3K");
  CHECK(destinations(white_options(short_board), Square(1, 1)) == std::set<std::string>{"a3", "b3"});
  CHECK(white_options(short_board).size() == 3 + 3);

  // diagonal capture of the king ends the game, no promotion branch
  const Position kp = parse_fen("8x8/2k5/1P6/8/8/8/8/8/4K3");
  int to_c8 = 0;
  for (const Option& o : white_options(kp)) {
    if (o.move.to.name() == "c8" && o.move.from.name() == "b7") {
      ++to_c8;
      CHECK(o.result.status() == Status::WhiteWon);
      CHECK_FALSE(o.move.promotion.has_value());
    }
  }
  CHECK(to_c8 == 1);
}

TEST_CASE("promotion offers queen and knight only") {
  const Position p = parse_fen("8x8/8/3P4/4k3/8/8/8/2K5/8");
  std::set<std::string> promos;
  for (const Option& o : white_options(p)) {
    if (o.move.from.name() == "d7") promos.insert(o.move.uci());
  }
  CHECK(promos == std::set<std::string>{"d7d8q", "d7d8n"});
  const Position knight = apply_move(p, Move{Color::White, Square(3, 6), Square(3, 7), Kind::Knight});
  CHECK(*knight.at(Square(3, 7)) == Piece{Color::White, Kind::Knight});
  CHECK(emit_fen(knight) == "8x8/3N4/8/4k3/8/8/8/2K5/8");
}

TEST_CASE("blocked pawn: the black king in front may take it") {
  const Position p = parse_fen("8x8/8/8/8/4k3/4P3/8/8/K7");
  bool takes = false;
  for (const Option& o : black_options(p)) takes |= o.move.to.name() == "e4";
  CHECK(takes);
}

TEST_CASE("terminal positions have no options") {
  const Position won = parse_fen("8x8/3R4/8/3K4/8/8/8/8/8");
  CHECK_THROWS_AS(white_options(won), UsageError);
  CHECK_THROWS_AS(black_options(won), UsageError);
  const Position p = parse_fen(kFig1);
  CHECK_THROWS_AS(apply_move(p, Move{Color::White, Square(7, 7), Square(0, 0), {}}), UsageError);
}

TEST_CASE("piece set parsing and closure") {
  CHECK(PieceSet::parse("kRK").id() == "KRk");
  CHECK(PieceSet::parse("KNk").color_flipped().id() == "Kkn");
  CHECK_THROWS_AS(PieceSet::parse("Kq"), ParseError);
  CHECK_THROWS_AS(PieceSet::parse("KKk"), ParseError);
  CHECK_THROWS_AS(PieceSet::parse("KXk"), ParseError);

  auto ids = [](const std::vector<PieceSet>& v) {
    std::vector<std::string> out;
    for (const auto& p : v) out.push_back(p.id());
    return out;
  };
  CHECK(ids(closure_piece_sets(PieceSet::parse("KPk"))) == std::vector<std::string>{"KNk", "KPk", "KQk", "Kk"});
  CHECK(ids(closure_piece_sets(PieceSet::parse("KBk"))) == std::vector<std::string>{"KBk", "Kk"});
  CHECK(ids(closure_piece_sets(PieceSet::parse("Kk"))) == std::vector<std::string>{"Kk"});
}

TEST_CASE("color flip is an involution") {
  const Position p = parse_fen(kFig2);
  const Position f = color_flip(p);
  CHECK(emit_fen(f) == "8x8/8/2k5/8/8/5K2/8/8/8");
  CHECK(color_flip(f) == p);
}

TEST_CASE("move generation commutes with the color flip on random positions") {
  std::mt19937 rng(7);
  const std::vector<std::string> sets{"KQk", "KRk", "KBk", "KNk", "KPk", "Kkp", "Kkn", "Kk"};
  const std::vector<BoardDims> boards{{8, 8}, {4, 4}, {3, 4}, {8, 3}, {5, 7}};
  int checked = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const BoardDims d = boards[rng() % boards.size()];
    const PieceSet ps = PieceSet::parse(sets[rng() % sets.size()]);
    std::vector<Placement> pl;
    std::set<int> used;
    bool ok = true;
    for (const Piece& piece : ps.pieces()) {
      int sq;
      int guard = 0;
      do {
        sq = static_cast<int>(rng() % static_cast<unsigned>(d.squares()));
        Square s = Square::from_index(sq, d);
        if (!used.count(sq) && !(piece.kind == Kind::Pawn && (s.rank == 0 || s.rank == d.ranks - 1))) break;
      } while (++guard < 100);
      if (guard >= 100) ok = false;
      used.insert(sq);
      pl.push_back({Square::from_index(sq, d), piece});
    }
    if (!ok) continue;
    const Position p(d, pl);
    const auto white = white_options(p);
    const auto black = black_options(p);
    CHECK_FALSE(white.empty());
    CHECK_FALSE(black.empty());

    std::set<std::string> flipped_black;
    for (const Option& o : black) {
      flipped_black.insert(emit_fen(color_flip(o.result)));
      for (const Placement& q : o.result.placements()) {
        if (q.piece.kind == Kind::Pawn) CHECK((q.square.rank > 0 && q.square.rank < d.ranks - 1));
      }
    }
    CHECK(result_fens(white_options(color_flip(p))) == flipped_black);
    ++checked;
  }
  CHECK(checked > 2500);
}
