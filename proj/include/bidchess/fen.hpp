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

#include <string>
#include <string_view>

#include "bidchess/board.hpp"

namespace bidchess {

/// Parses "<files>x<ranks>/<placement>", where the placement is the FEN board
/// field generalized to the board size (ranks from the top, digits for runs of
/// empty squares). There is no side-to-move field. A missing king encodes a
/// terminal position. Throws ParseError.
Position parse_fen(std::string_view text);

/// Canonical text form; `parse_fen(emit_fen(p)) == p`.
std::string emit_fen(const Position& p);

}  // namespace bidchess
