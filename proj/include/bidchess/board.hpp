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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bidchess {

/// Board geometry. Both dimensions lie in [2, 8].
struct BoardDims {
  int files = 8;
  int ranks = 8;

  constexpr int squares() const { return files * ranks; }
  constexpr bool operator==(const BoardDims&) const = default;

  /// Throws ParseError outside [2, 8].
  void validate() const;
  /// "8x8", files first.
  std::string to_string() const;
  static BoardDims parse(std::string_view text);
};

/// 0-based square; rank 0 is White's first rank.
struct Square {
  std::int8_t file = 0;
  std::int8_t rank = 0;

  constexpr Square() = default;
  constexpr Square(int f, int r) : file(static_cast<std::int8_t>(f)), rank(static_cast<std::int8_t>(r)) {}

  constexpr int index(const BoardDims& d) const { return rank * d.files + file; }
  static constexpr Square from_index(int idx, const BoardDims& d) { return Square(idx % d.files, idx / d.files); }
  constexpr bool on_board(const BoardDims& d) const {
    return file >= 0 && rank >= 0 && file < d.files && rank < d.ranks;
  }
  constexpr auto operator<=>(const Square&) const = default;

  /// Algebraic name, e.g. "d6".
  std::string name() const;
  static Square parse(std::string_view text, const BoardDims& d);
};

enum class Color : std::uint8_t { White, Black };

constexpr Color opponent(Color c) { return c == Color::White ? Color::Black : Color::White; }
std::string_view color_name(Color c);

/// Declaration order is the canonical piece order used in identifiers and
/// enumeration.
enum class Kind : std::uint8_t { King, Queen, Rook, Bishop, Knight, Pawn };

struct Piece {
  Color color = Color::White;
  Kind kind = Kind::King;

  constexpr auto operator<=>(const Piece&) const = default;

  /// FEN letter: uppercase for White.
  char letter() const;
  static std::optional<Piece> from_letter(char c);
};

enum class Status : std::uint8_t { Ongoing, WhiteWon, BlackWon };

std::string_view status_name(Status s);

struct Placement {
  Square square;
  Piece piece;

  constexpr bool operator==(const Placement&) const = default;
};

/// Ordered multiset of pieces in canonical order (White before Black, kinds in
/// declaration order). The identifier spells the letters in that order, e.g.
/// "KRk", "KNk", "Kk", "Kkn".
class PieceSet {
 public:
  PieceSet() = default;
  explicit PieceSet(std::vector<Piece> pieces);

  /// Accepts letters in any order; throws ParseError on unknown letters or
  /// when a king is missing or doubled.
  static PieceSet parse(std::string_view id);

  std::span<const Piece> pieces() const { return pieces_; }
  std::size_t size() const { return pieces_.size(); }
  const std::string& id() const { return id_; }
  bool has_pawn() const;

  /// Same pieces with colors swapped.
  PieceSet color_flipped() const;

  bool operator==(const PieceSet& o) const { return id_ == o.id_; }
  bool operator<(const PieceSet& o) const { return id_ < o.id_; }

 private:
  std::vector<Piece> pieces_;
  std::string id_;
};

/// Every piece set reachable from `ps` by captures and promotion (to queen or
/// knight), including `ps` itself, sorted by identifier.
std::vector<PieceSet> closure_piece_sets(const PieceSet& ps);

/// A placement of at most three pieces plus a game status. There is no side
/// to move. Terminal positions keep the surviving pieces on the board.
class Position {
 public:
  static constexpr std::size_t kMaxPieces = 3;

  Position() = default;
  /// Sorts placements, derives the status from the kings present, and
  /// validates every invariant; throws UsageError on violations.
  Position(BoardDims dims, std::span<const Placement> placements);

  const BoardDims& dims() const { return dims_; }
  Status status() const { return status_; }
  bool ongoing() const { return status_ == Status::Ongoing; }
  std::span<const Placement> placements() const { return {placements_.data(), count_}; }
  std::size_t piece_count() const { return count_; }

  std::optional<Piece> at(Square s) const;
  std::optional<Square> king(Color c) const;

  /// Material as a piece set (terminal positions report the survivors only,
  /// which is not a valid PieceSet; use `origin_piece_set` for those).
  std::vector<Piece> material() const;
  /// The piece set this position was enumerated under: the material plus the
  /// captured king for terminal positions.
  PieceSet origin_piece_set() const;

  bool operator==(const Position& o) const;

 private:
  BoardDims dims_{};
  std::array<Placement, kMaxPieces> placements_{};
  std::size_t count_ = 0;
  Status status_ = Status::Ongoing;
};

/// Swap colors and mirror ranks.
Position color_flip(const Position& p);

struct Move {
  Color mover = Color::White;
  Square from;
  Square to;
  std::optional<Kind> promotion;

  bool operator==(const Move&) const = default;

  /// Coordinate notation, e.g. "d7d8n"; "d7d8" when no promotion.
  std::string uci() const;
};

struct Option {
  Move move;
  Position result;
};

/// Legal moves for `mover` with their successor positions. Throws UsageError
/// on a terminal position.
std::vector<Option> options(const Position& p, Color mover);
inline std::vector<Option> white_options(const Position& p) { return options(p, Color::White); }
inline std::vector<Option> black_options(const Position& p) { return options(p, Color::Black); }

/// Throws UsageError unless `m` is one of its mover's options.
Position apply_move(const Position& p, const Move& m);

/// Short algebraic-ish description used in reports, e.g. "Nd1-c3", "Rh8xd8",
/// "d7-d8=N".
std::string describe_move(const Position& p, const Move& m);

}  // namespace bidchess
