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

#include "bidchess/space.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "bidchess/error.hpp"

namespace bidchess {

namespace {

bool square_allowed(const Piece& piece, Square s, const BoardDims& d) {
  return piece.kind != Kind::Pawn || (s.rank > 0 && s.rank < d.ranks - 1);
}

std::vector<Piece> without(std::span<const Piece> pieces, Piece drop) {
  std::vector<Piece> out;
  bool dropped = false;
  for (const Piece& p : pieces) {
    if (!dropped && p == drop) {
      dropped = true;
      continue;
    }
    out.push_back(p);
  }
  return out;
}

// Calls f(squares) for every legal placement of `pieces`, in index order.
template <class F>
void for_each_placement(std::span<const Piece> pieces, const BoardDims& d, F&& f) {
  const int n = static_cast<int>(pieces.size());
  const int s = d.squares();
  std::array<int, Position::kMaxPieces> sq{};
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      f(std::span<const int>(sq.data(), static_cast<std::size_t>(n)));
      return;
    }
    for (int i = 0; i < s; ++i) {
      bool used = false;
      for (int j = 0; j < depth; ++j) used |= sq[j] == i;
      if (used || !square_allowed(pieces[depth], Square::from_index(i, d), d)) continue;
      sq[depth] = i;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

Space::Space(BoardDims dims, std::span<const PieceSet> roots) : dims_(dims) {
  dims_.validate();
  std::set<PieceSet> sets;
  for (const PieceSet& r : roots) {
    for (PieceSet& c : closure_piece_sets(r)) sets.insert(std::move(c));
  }
  for (const PieceSet& ps : sets) {
    SpaceBlock block{ps, positions_.size(), 0, 0, 0};
    BlockTables t;
    t.ongoing.pieces.assign(ps.pieces().begin(), ps.pieces().end());
    t.white_won.pieces = without(ps.pieces(), {Color::Black, Kind::King});
    t.black_won.pieces = without(ps.pieces(), {Color::White, Kind::King});

    std::size_t before = positions_.size();
    enumerate(t.ongoing, before);
    block.ongoing = positions_.size() - before;
    before = positions_.size();
    enumerate(t.white_won, before);
    block.white_won = positions_.size() - before;
    before = positions_.size();
    enumerate(t.black_won, before);
    block.black_won = positions_.size() - before;

    blocks_.push_back(std::move(block));
    tables_.push_back(std::move(t));
  }
}

void Space::enumerate(Lookup& lookup, std::size_t base) {
  std::size_t table_size = 1;
  for (std::size_t i = 0; i < lookup.pieces.size(); ++i) table_size *= static_cast<std::size_t>(dims_.squares());
  lookup.table.assign(table_size, -1);
  std::size_t next = base;
  std::array<Placement, Position::kMaxPieces> pl{};
  for_each_placement(lookup.pieces, dims_, [&](std::span<const int> sq) {
    std::size_t raw = 0;
    for (std::size_t i = 0; i < sq.size(); ++i) {
      raw = raw * static_cast<std::size_t>(dims_.squares()) + static_cast<std::size_t>(sq[i]);
      pl[i] = Placement{Square::from_index(sq[i], dims_), lookup.pieces[i]};
    }
    lookup.table[raw] = static_cast<std::int32_t>(next++);
    positions_.emplace_back(dims_, std::span<const Placement>(pl.data(), sq.size()));
  });
}

std::vector<PieceSet> Space::piece_sets() const {
  std::vector<PieceSet> out;
  for (const SpaceBlock& b : blocks_) out.push_back(b.set);
  return out;
}

std::size_t Space::raw_index(const Position& p) const {
  std::size_t raw = 0;
  for (const Placement& pl : p.placements()) {
    raw = raw * static_cast<std::size_t>(dims_.squares()) + static_cast<std::size_t>(pl.square.index(dims_));
  }
  return raw;
}

std::optional<std::size_t> Space::index_of(const Position& p) const {
  if (!(p.dims() == dims_)) return std::nullopt;
  const PieceSet origin = p.origin_piece_set();
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), origin,
                             [](const SpaceBlock& b, const PieceSet& s) { return b.set < s; });
  if (it == blocks_.end() || !(it->set == origin)) return std::nullopt;
  const BlockTables& t = tables_[static_cast<std::size_t>(it - blocks_.begin())];
  const Lookup& lookup = p.status() == Status::Ongoing    ? t.ongoing
                         : p.status() == Status::WhiteWon ? t.white_won
                                                          : t.black_won;
  const std::size_t raw = raw_index(p);
  if (raw >= lookup.table.size() || lookup.table[raw] < 0) return std::nullopt;
  return static_cast<std::size_t>(lookup.table[raw]);
}

std::size_t Space::require_index(const Position& p) const {
  auto idx = index_of(p);
  if (!idx) throw LookupError("position not in space");
  return *idx;
}

const SpaceBlock& Space::block_of(std::size_t index) const {
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                             [](std::size_t i, const SpaceBlock& b) { return i < b.begin; });
  return *(it - 1);
}

std::size_t count_ongoing(const PieceSet& ps, const BoardDims& d) {
  std::size_t n = 0;
  for_each_placement(ps.pieces(), d, [&](std::span<const int>) { ++n; });
  return n;
}

std::vector<Position> symmetry_images(const Position& p) {
  const BoardDims& d = p.dims();
  const int F = d.files, R = d.ranks;
  bool pawns = false;
  for (const Placement& pl : p.placements()) pawns |= pl.piece.kind == Kind::Pawn;

  using Map = Square (*)(Square, int, int);
  std::vector<Map> maps{
      [](Square s, int, int) { return s; },
      [](Square s, int f, int) { return Square(f - 1 - s.file, s.rank); },
  };
  if (!pawns) {
    maps.push_back([](Square s, int, int r) { return Square(s.file, r - 1 - s.rank); });
    maps.push_back([](Square s, int f, int r) { return Square(f - 1 - s.file, r - 1 - s.rank); });
    if (F == R) {
      maps.push_back([](Square s, int, int) { return Square(s.rank, s.file); });
      maps.push_back([](Square s, int f, int) { return Square(f - 1 - s.rank, s.file); });
      maps.push_back([](Square s, int, int r) { return Square(s.rank, r - 1 - s.file); });
      maps.push_back([](Square s, int f, int r) { return Square(f - 1 - s.rank, r - 1 - s.file); });
    }
  }
  std::vector<Position> out;
  out.reserve(maps.size());
  std::array<Placement, Position::kMaxPieces> pl{};
  for (Map m : maps) {
    const auto src = p.placements();
    for (std::size_t i = 0; i < src.size(); ++i) pl[i] = Placement{m(src[i].square, F, R), src[i].piece};
    out.emplace_back(d, std::span<const Placement>(pl.data(), src.size()));
  }
  return out;
}

}  // namespace bidchess
