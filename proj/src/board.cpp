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

#include "bidchess/board.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bidchess/error.hpp"

namespace bidchess {

void BoardDims::validate() const {
  if (files < 2 || files > 8 || ranks < 2 || ranks > 8) {
    throw ParseError("board dimensions must lie in [2, 8]: " + to_string());
  }
}

std::string BoardDims::to_string() const { return std::to_string(files) + "x" + std::to_string(ranks); }

BoardDims BoardDims::parse(std::string_view text) {
  const auto x = text.find('x');
  if (x == std::string_view::npos || x == 0 || x + 1 >= text.size()) {
    throw ParseError("board must look like FxR: '" + std::string(text) + "'");
  }
  auto num = [&](std::string_view s) {
    if (s.size() != 1 || s[0] < '0' || s[0] > '9') {
      throw ParseError("bad board dimension in '" + std::string(text) + "'");
    }
    return s[0] - '0';
  };
  BoardDims d{num(text.substr(0, x)), num(text.substr(x + 1))};
  d.validate();
  return d;
}

std::string Square::name() const {
  std::string s;
  s += static_cast<char>('a' + file);
  s += static_cast<char>('1' + rank);
  return s;
}

Square Square::parse(std::string_view text, const BoardDims& d) {
  if (text.size() != 2 || text[0] < 'a' || text[0] > 'h' || text[1] < '1' || text[1] > '8') {
    throw ParseError("bad square '" + std::string(text) + "'");
  }
  Square s(text[0] - 'a', text[1] - '1');
  if (!s.on_board(d)) throw ParseError("square off board: '" + std::string(text) + "'");
  return s;
}

std::string_view color_name(Color c) { return c == Color::White ? "white" : "black"; }

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Ongoing: return "ongoing";
    case Status::WhiteWon: return "white_won";
    case Status::BlackWon: return "black_won";
  }
  return "?";
}

char Piece::letter() const {
  static constexpr char kLetters[] = {'K', 'Q', 'R', 'B', 'N', 'P'};
  char c = kLetters[static_cast<int>(kind)];
  return color == Color::White ? c : static_cast<char>(c - 'A' + 'a');
}

std::optional<Piece> Piece::from_letter(char c) {
  const Color color = (c >= 'a' && c <= 'z') ? Color::Black : Color::White;
  const char up = color == Color::Black ? static_cast<char>(c - 'a' + 'A') : c;
  switch (up) {
    case 'K': return Piece{color, Kind::King};
    case 'Q': return Piece{color, Kind::Queen};
    case 'R': return Piece{color, Kind::Rook};
    case 'B': return Piece{color, Kind::Bishop};
    case 'N': return Piece{color, Kind::Knight};
    case 'P': return Piece{color, Kind::Pawn};
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// PieceSet

PieceSet::PieceSet(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  std::sort(pieces_.begin(), pieces_.end());
  int wk = 0, bk = 0;
  for (const Piece& p : pieces_) {
    if (p.kind == Kind::King) (p.color == Color::White ? wk : bk)++;
    id_ += p.letter();
  }
  if (wk != 1 || bk != 1) {
    throw ParseError("piece set needs exactly one king per color: '" + id_ + "'");
  }
  if (pieces_.size() > Position::kMaxPieces) {
    throw ParseError("piece set has more than three pieces: '" + id_ + "'");
  }
}

PieceSet PieceSet::parse(std::string_view id) {
  std::vector<Piece> pieces;
  for (char c : id) {
    auto p = Piece::from_letter(c);
    if (!p) throw ParseError("unknown piece letter '" + std::string(1, c) + "' in '" + std::string(id) + "'");
    pieces.push_back(*p);
  }
  return PieceSet(std::move(pieces));
}

bool PieceSet::has_pawn() const {
  return std::any_of(pieces_.begin(), pieces_.end(), [](const Piece& p) { return p.kind == Kind::Pawn; });
}

PieceSet PieceSet::color_flipped() const {
  std::vector<Piece> out;
  for (Piece p : pieces_) out.push_back({opponent(p.color), p.kind});
  return PieceSet(std::move(out));
}

std::vector<PieceSet> closure_piece_sets(const PieceSet& ps) {
  std::set<PieceSet> seen;
  std::vector<PieceSet> stack{ps};
  while (!stack.empty()) {
    PieceSet cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    const auto pieces = cur.pieces();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (pieces[i].kind == Kind::King) continue;
      std::vector<Piece> rest(pieces.begin(), pieces.end());
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      stack.emplace_back(rest);
      if (pieces[i].kind == Kind::Pawn) {
        for (Kind k : {Kind::Queen, Kind::Knight}) {
          std::vector<Piece> promoted(pieces.begin(), pieces.end());
          promoted[i].kind = k;
          stack.emplace_back(promoted);
        }
      }
    }
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Position

Position::Position(BoardDims dims, std::span<const Placement> placements) : dims_(dims) {
  dims_.validate();
  if (placements.size() > kMaxPieces) throw UsageError("position has more than three pieces");
  count_ = placements.size();
  std::copy(placements.begin(), placements.end(), placements_.begin());
  std::sort(placements_.begin(), placements_.begin() + static_cast<std::ptrdiff_t>(count_),
            [&](const Placement& a, const Placement& b) {
              if (a.piece != b.piece) return a.piece < b.piece;
              return a.square.index(dims_) < b.square.index(dims_);
            });
  int kings[2] = {0, 0};
  for (std::size_t i = 0; i < count_; ++i) {
    const Placement& pl = placements_[i];
    if (!pl.square.on_board(dims_)) throw UsageError("piece off board at " + pl.square.name());
    for (std::size_t j = 0; j < i; ++j) {
      if (placements_[j].square == pl.square) throw UsageError("two pieces on " + pl.square.name());
    }
    if (pl.piece.kind == Kind::King) ++kings[static_cast<int>(pl.piece.color)];
    if (pl.piece.kind == Kind::Pawn && (pl.square.rank == 0 || pl.square.rank == dims_.ranks - 1)) {
      throw UsageError("pawn on first or last rank at " + pl.square.name());
    }
  }
  if (kings[0] > 1 || kings[1] > 1) throw UsageError("duplicate king");
  if (kings[0] == 0 && kings[1] == 0) throw UsageError("no kings on the board");
  status_ = kings[1] == 0 ? Status::WhiteWon : kings[0] == 0 ? Status::BlackWon : Status::Ongoing;
}

std::optional<Piece> Position::at(Square s) const {
  for (std::size_t i = 0; i < count_; ++i) {
    if (placements_[i].square == s) return placements_[i].piece;
  }
  return std::nullopt;
}

std::optional<Square> Position::king(Color c) const {
  for (std::size_t i = 0; i < count_; ++i) {
    if (placements_[i].piece == Piece{c, Kind::King}) return placements_[i].square;
  }
  return std::nullopt;
}

std::vector<Piece> Position::material() const {
  std::vector<Piece> out;
  for (std::size_t i = 0; i < count_; ++i) out.push_back(placements_[i].piece);
  return out;
}

PieceSet Position::origin_piece_set() const {
  auto m = material();
  if (status_ == Status::WhiteWon) m.push_back({Color::Black, Kind::King});
  if (status_ == Status::BlackWon) m.push_back({Color::White, Kind::King});
  return PieceSet(std::move(m));
}

bool Position::operator==(const Position& o) const {
  if (!(dims_ == o.dims_) || status_ != o.status_ || count_ != o.count_) return false;
  for (std::size_t i = 0; i < count_; ++i) {
    if (!(placements_[i] == o.placements_[i])) return false;
  }
  return true;
}

Position color_flip(const Position& p) {
  std::array<Placement, Position::kMaxPieces> out{};
  const auto pls = p.placements();
  for (std::size_t i = 0; i < pls.size(); ++i) {
    out[i].square = Square(pls[i].square.file, p.dims().ranks - 1 - pls[i].square.rank);
    out[i].piece = {opponent(pls[i].piece.color), pls[i].piece.kind};
  }
  return Position(p.dims(), std::span<const Placement>(out.data(), pls.size()));
}

// ---------------------------------------------------------------------------
// Moves

std::string Move::uci() const {
  std::string s = from.name() + to.name();
  if (promotion) s += static_cast<char>(*promotion == Kind::Queen ? 'q' : 'n');
  return s;
}

namespace {

constexpr int kKingSteps[8][2] = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1}};
constexpr int kKnightLeaps[8][2] = {{1, 2}, {2, 1}, {2, -1}, {1, -2}, {-1, -2}, {-2, -1}, {-2, 1}, {-1, 2}};
constexpr int kRookDirs[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
constexpr int kBishopDirs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};

struct Generator {
  const Position& pos;
  Color mover;
  std::vector<Option>& out;

  // Emits the move from `from` to `to` for the piece at index `idx`.
  void emit(std::size_t idx, Square to, std::optional<Kind> promotion) {
    const auto pls = pos.placements();
    std::array<Placement, Position::kMaxPieces> next{};
    std::size_t n = 0;
    bool captured_king = false;
    for (std::size_t i = 0; i < pls.size(); ++i) {
      if (i == idx) continue;
      if (pls[i].square == to) {
        captured_king = pls[i].piece.kind == Kind::King;
        continue;
      }
      next[n++] = pls[i];
    }
    Piece moved = pls[idx].piece;
    if (promotion) moved.kind = *promotion;
    // A pawn that captures the king on the last rank ends the game; the
    // terminal position records it as a queen.
    if (captured_king && moved.kind == Kind::Pawn && (to.rank == 0 || to.rank == pos.dims().ranks - 1)) {
      moved.kind = Kind::Queen;
    }
    next[n++] = Placement{to, moved};
    Move m{mover, pls[idx].square, to, promotion};
    out.push_back(Option{m, Position(pos.dims(), std::span<const Placement>(next.data(), n))});
  }

  // Returns false when the square is off board or holds an own piece.
  bool target_ok(Square to) const {
    if (!to.on_board(pos.dims())) return false;
    auto occ = pos.at(to);
    return !occ || occ->color != mover;
  }

  void steps(std::size_t idx, const int (*dirs)[2], int count) {
    const Square from = pos.placements()[idx].square;
    for (int i = 0; i < count; ++i) {
      Square to(from.file + dirs[i][0], from.rank + dirs[i][1]);
      if (target_ok(to)) emit(idx, to, std::nullopt);
    }
  }

  void slides(std::size_t idx, const int (*dirs)[2], int count) {
    const Square from = pos.placements()[idx].square;
    for (int i = 0; i < count; ++i) {
      Square to(from.file + dirs[i][0], from.rank + dirs[i][1]);
      while (to.on_board(pos.dims())) {
        auto occ = pos.at(to);
        if (occ && occ->color == mover) break;
        emit(idx, to, std::nullopt);
        if (occ) break;
        to = Square(to.file + dirs[i][0], to.rank + dirs[i][1]);
      }
    }
  }

  void pawn(std::size_t idx) {
    const BoardDims& d = pos.dims();
    const Square from = pos.placements()[idx].square;
    const int dir = mover == Color::White ? 1 : -1;
    const int last = mover == Color::White ? d.ranks - 1 : 0;
    const int start = mover == Color::White ? 1 : d.ranks - 2;
    auto push = [&](Square to, bool captures_king) {
      if (to.rank == last && !captures_king) {
        emit(idx, to, Kind::Queen);
        emit(idx, to, Kind::Knight);
      } else {
        emit(idx, to, std::nullopt);
      }
    };
    Square one(from.file, from.rank + dir);
    if (one.on_board(d) && !pos.at(one)) {
      push(one, false);
      Square two(from.file, from.rank + 2 * dir);
      if (d.ranks >= 4 && from.rank == start && two.on_board(d) && !pos.at(two)) push(two, false);
    }
    for (int df : {-1, 1}) {
      Square to(from.file + df, from.rank + dir);
      if (!to.on_board(d)) continue;
      auto occ = pos.at(to);
      if (occ && occ->color != mover) push(to, occ->kind == Kind::King);
    }
  }

  void run() {
    const auto pls = pos.placements();
    for (std::size_t i = 0; i < pls.size(); ++i) {
      if (pls[i].piece.color != mover) continue;
      switch (pls[i].piece.kind) {
        case Kind::King: steps(i, kKingSteps, 8); break;
        case Kind::Knight: steps(i, kKnightLeaps, 8); break;
        case Kind::Rook: slides(i, kRookDirs, 4); break;
        case Kind::Bishop: slides(i, kBishopDirs, 4); break;
        case Kind::Queen:
          slides(i, kRookDirs, 4);
          slides(i, kBishopDirs, 4);
          break;
        case Kind::Pawn: pawn(i); break;
      }
    }
  }
};

}  // namespace

std::vector<Option> options(const Position& p, Color mover) {
  if (!p.ongoing()) throw UsageError("move options requested for a terminal position");
  std::vector<Option> out;
  out.reserve(32);
  Generator{p, mover, out}.run();
  return out;
}

Position apply_move(const Position& p, const Move& m) {
  for (Option& o : options(p, m.mover)) {
    if (o.move == m) return std::move(o.result);
  }
  throw UsageError("illegal move " + m.uci() + " for " + std::string(color_name(m.mover)));
}

std::string describe_move(const Position& p, const Move& m) {
  auto piece = p.at(m.from);
  std::string s;
  if (piece && piece->kind != Kind::Pawn) s += static_cast<char>(Piece{Color::White, piece->kind}.letter());
  s += m.from.name();
  s += p.at(m.to) ? 'x' : '-';
  s += m.to.name();
  if (m.promotion) {
    s += '=';
    s += *m.promotion == Kind::Queen ? 'Q' : 'N';
  }
  return s;
}

}  // namespace bidchess
