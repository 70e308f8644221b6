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
#include <optional>
#include <span>
#include <vector>

#include "bidchess/board.hpp"

namespace bidchess {

/// Index ranges of one piece set inside a Space. Positions are laid out as
/// the ongoing placements followed by the White-won terminals (black king
/// gone) and then the Black-won terminals (white king gone).
struct SpaceBlock {
  PieceSet set;
  std::size_t begin = 0;
  std::size_t ongoing = 0;
  std::size_t white_won = 0;
  std::size_t black_won = 0;

  std::size_t end() const { return begin + ongoing + white_won + black_won; }
};

/// An indexed, closed position space: every placement of every piece set in
/// the closure of the roots, plus their terminal positions.
///
/// Index order: piece sets by identifier; inside a set, placements in
/// row-major square order of each piece in piece-set order (the last piece
/// varies fastest). Pawns occupy ranks 1..ranks-2 only.
class Space {
 public:
  /// Throws ParseError on invalid dimensions.
  Space(BoardDims dims, std::span<const PieceSet> roots);

  const BoardDims& dims() const { return dims_; }
  std::size_t size() const { return positions_.size(); }
  const Position& position(std::size_t i) const { return positions_[i]; }
  std::span<const SpaceBlock> blocks() const { return blocks_; }
  /// Piece sets of the closure, sorted by identifier.
  std::vector<PieceSet> piece_sets() const;

  std::optional<std::size_t> index_of(const Position& p) const;
  /// Throws LookupError when `p` is outside the space.
  std::size_t require_index(const Position& p) const;

  const SpaceBlock& block_of(std::size_t index) const;

 private:
  struct Lookup {
    std::vector<Piece> pieces;
    std::vector<std::int32_t> table;
  };
  struct BlockTables {
    Lookup ongoing, white_won, black_won;
  };

  std::size_t raw_index(const Position& p) const;
  void enumerate(Lookup& lookup, std::size_t base);

  BoardDims dims_;
  std::vector<SpaceBlock> blocks_;
  std::vector<BlockTables> tables_;
  std::vector<Position> positions_;
};

/// Number of ongoing positions `enumerate_positions` produces for one piece
/// set, computed by the same rules as Space without materializing it.
std::size_t count_ongoing(const PieceSet& ps, const BoardDims& d);

/// Board symmetries that preserve the game: all eight dihedral maps on square
/// boards, the four axis reflections/rotation otherwise, and only the
/// left-right mirror when pawns are present.
std::vector<Position> symmetry_images(const Position& p);

}  // namespace bidchess
