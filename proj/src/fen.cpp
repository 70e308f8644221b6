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

#include "bidchess/fen.hpp"

#include <vector>

#include "bidchess/error.hpp"

namespace bidchess {

Position parse_fen(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw ParseError("FEN needs a '<files>x<ranks>/' prefix: '" + std::string(text) + "'");
  const BoardDims dims = BoardDims::parse(text.substr(0, slash));

  std::vector<Placement> placements;
  std::string_view body = text.substr(slash + 1);
  int rank = dims.ranks - 1;
  int file = 0;
  for (char c : body) {
    if (c == '/') {
      if (file != dims.files) throw ParseError("rank " + std::to_string(rank + 1) + " has the wrong width in '" + std::string(text) + "'");
      if (--rank < 0) throw ParseError("too many ranks in '" + std::string(text) + "'");
      file = 0;
    } else if (c >= '1' && c <= '8') {
      file += c - '0';
      if (file > dims.files) throw ParseError("gap runs past the board edge in '" + std::string(text) + "'");
    } else {
      auto piece = Piece::from_letter(c);
      if (!piece) throw ParseError("unknown character '" + std::string(1, c) + "' in '" + std::string(text) + "'");
      if (file >= dims.files) throw ParseError("piece past the board edge in '" + std::string(text) + "'");
      if (placements.size() == Position::kMaxPieces) throw ParseError("more than three pieces in '" + std::string(text) + "'");
      placements.push_back({Square(file, rank), *piece});
      ++file;
    }
  }
  if (rank != 0 || file != dims.files) throw ParseError("incomplete placement in '" + std::string(text) + "'");
  try {
    return Position(dims, placements);
  } catch (const UsageError& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

std::string emit_fen(const Position& p) {
  const BoardDims& d = p.dims();
  std::string s = d.to_string();
  for (int rank = d.ranks - 1; rank >= 0; --rank) {
    s += '/';
    int gap = 0;
    for (int file = 0; file < d.files; ++file) {
      auto piece = p.at(Square(file, rank));
      if (!piece) {
        ++gap;
        continue;
      }
      if (gap) s += static_cast<char>('0' + gap);
      gap = 0;
      s += piece->letter();
    }
    if (gap) s += static_cast<char>('0' + gap);
  }
  return s;
}

}  // namespace bidchess
