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

#include <set>

#include "bidchess/error.hpp"
#include "bidchess/fen.hpp"
#include "bidchess/game_graph.hpp"
#include "bidchess/space.hpp"
#include "doctest.h"

using namespace bidchess;

namespace {

// Independent count: three nested loops over squares with the pawn rule.
std::size_t brute_count(const BoardDims& d, bool pawn_in_middle) {
  std::size_t n = 0;
  const int s = d.squares();
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b)
      for (int c = 0; c < s; ++c) {
        if (a == b || b == c || a == c) continue;
        const int rank = b / d.files;
        if (pawn_in_middle && (rank == 0 || rank == d.ranks - 1)) continue;
        ++n;
      }
  return n;
}

}  // namespace

TEST_CASE("ongoing position counts") {
  const BoardDims d{8, 8};
  CHECK(count_ongoing(PieceSet::parse("Kk"), d) == 4032);
  CHECK(count_ongoing(PieceSet::parse("KRk"), d) == 249984);
  CHECK(count_ongoing(PieceSet::parse("KPk"), d) == 48u * 63u * 62u);
  CHECK(count_ongoing(PieceSet::parse("KPk"), d) == brute_count(d, true));
  CHECK(count_ongoing(PieceSet::parse("KNk"), BoardDims{3, 4}) == brute_count(BoardDims{3, 4}, false));
}

TEST_CASE("space layout and lookup") {
  const BoardDims d{4, 4};
  const PieceSet roots[] = {PieceSet::parse("KPk")};
  const Space space(d, roots);
  std::vector<std::string> ids;
  for (const auto& b : space.blocks()) ids.push_back(b.set.id());
  CHECK(ids == std::vector<std::string>{"KNk", "KPk", "KQk", "Kk"});

  const SpaceBlock& kn = space.blocks()[0];
  CHECK(kn.begin == 0);
  CHECK(kn.ongoing == 16u * 15u * 14u);
  CHECK(kn.white_won == 16u * 15u);
  CHECK(kn.black_won == 16u * 15u);
  CHECK(emit_fen(space.position(0)) == "4x4/4/4/4/KNk1");
  CHECK(emit_fen(space.position(1)) == "4x4/4/4/4/KN1k");
  CHECK(space.position(kn.begin + kn.ongoing).status() == Status::WhiteWon);
  CHECK(space.position(kn.end() - 1).status() == Status::BlackWon);

  const SpaceBlock& kk = space.blocks()[3];
  CHECK(kk.ongoing == 16u * 15u);
  CHECK(kk.white_won == 16);
  CHECK(kk.black_won == 16);
  CHECK(kk.end() == space.size());

  for (std::size_t i = 0; i < space.size(); ++i) {
    REQUIRE(space.index_of(space.position(i)) == i);
    CHECK(&space.block_of(i) == &space.blocks()[(i >= kn.end()) + (i >= space.blocks()[1].end()) + (i >= space.blocks()[2].end())]);
  }
  CHECK_THROWS_AS(space.require_index(parse_fen("4x4/4/4/4/KRk1")), LookupError);
  CHECK_FALSE(space.index_of(parse_fen("8x8/8/8/8/8/8/8/8/KNk5")).has_value());
}

TEST_CASE("symmetry images") {
  CHECK(symmetry_images(parse_fen("8x8/8/8/8/8/8/8/8/KNk5")).size() == 8);
  CHECK(symmetry_images(parse_fen("8x3/8/8/KNk5")).size() == 4);
  CHECK(symmetry_images(parse_fen("8x8/8/8/8/8/8/8/1P6/K1k5")).size() == 2);
  for (const Position& img : symmetry_images(parse_fen("3x4/2k/3/3/K1N"))) {
    CHECK(img.ongoing());
    CHECK(img.piece_count() == 3);
  }
}

TEST_CASE("space graph: options resolved, symmetry classes consistent") {
  const PieceSet roots[] = {PieceSet::parse("KNk")};
  const Space space(BoardDims{4, 4}, roots);
  const SpaceGraph plain = build_space_graph(space, false);
  CHECK(plain.graph.size() == space.size());
  for (NodeId i = 0; i < plain.graph.size(); ++i) {
    if (!plain.graph.ongoing(i)) {
      CHECK(plain.graph.white(i).empty());
      continue;
    }
    CHECK_FALSE(plain.graph.white(i).empty());
    CHECK_FALSE(plain.graph.black(i).empty());
  }
  const SpaceGraph sym = build_space_graph(space, true);
  CHECK(sym.graph.size() < space.size() / 4);
  for (std::size_t i = 0; i < space.size(); ++i) {
    const std::size_t rep = sym.representative[sym.node_of[i]];
    CHECK(rep <= i);
    CHECK(sym.node_of[rep] == sym.node_of[i]);
  }
}

TEST_CASE("game graph from lists validates shape") {
  using S = Status;
  CHECK_NOTHROW(GameGraph::from_lists({S::Ongoing, S::WhiteWon, S::BlackWon}, {{1, 1}, {}, {}}, {{2}, {}, {}}));
  const GameGraph g = GameGraph::from_lists({S::Ongoing, S::WhiteWon, S::BlackWon}, {{1, 1}, {}, {}}, {{2}, {}, {}});
  CHECK(g.white(0).size() == 1);
  CHECK_THROWS_AS(GameGraph::from_lists({S::Ongoing, S::WhiteWon}, {{}, {}}, {{1}, {}}), UsageError);
  CHECK_THROWS_AS(GameGraph::from_lists({S::WhiteWon}, {{0}}, {{}}), UsageError);
  CHECK_THROWS_AS(GameGraph::from_lists({S::Ongoing, S::WhiteWon}, {{5}, {}}, {{1}, {}}), UsageError);
}
