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
#include <string_view>
#include <vector>

#include "bidchess/candidate.hpp"
#include "bidchess/game_graph.hpp"
#include "bidchess/space.hpp"

namespace bidchess {

/// Which transient set: White's T or Black's T'.
enum class Perspective : std::uint8_t { White, Black };

/// Smallest k with P in T_k (or T'_k) for every node, -1 when P never joins.
///
/// T_0 holds the terminals. P joins T_{k+1} when one of White's x-greedy
/// options (any option attaining the maximum) is in T_k, or when every Black
/// option is. T' swaps the roles: a Black option attaining the minimum, or
/// all White options.
struct TransientLabels {
  Perspective perspective = Perspective::White;
  std::vector<std::int32_t> label;
  /// Unlabeled nodes with x > 0 (White) or x < 1 (Black), ascending.
  std::vector<NodeId> uncovered;
  std::int32_t max_label = 0;
  std::size_t labeled = 0;
};

/// Retrograde breadth-first closure over reverse adjacency, one level per
/// T_k round. `x` must be ranked per node (see rank_values).
TransientLabels compute_transient(const RankedValues& x, const GameGraph& g, Perspective side);

/// Every labeled node has a witness into strictly smaller labels, and every
/// terminal carries label 0.
bool labels_sound(const TransientLabels& t, const RankedValues& x, const GameGraph& g);

struct Certificate {
  bool alpha_equals_x = false;
  bool beta_equals_x = false;
  TransientLabels t;
  TransientLabels t_prime;
};

/// alpha = x exactly when every node with x > 0 is in T; beta = x exactly
/// when every node with x < 1 is in T'. Assumes x is a Richman function
/// (zero violations); the uncovered lists are the witness otherwise.
Certificate certify(const RankedValues& x, const GameGraph& g);

enum class QuiescenceClass : std::uint8_t { None, BareKings, GhostBishop, BlockedPawn, CorneredKing, Other };

std::string_view class_name(QuiescenceClass c);

/// Shape-based class of a quiescent position: bare kings; a bishop and the
/// black king on squares of opposite colour; the black king in front of the
/// white pawn on its file; the white king on an edge file in front of its
/// own pawn on one of the last two ranks; Other for anything else.
QuiescenceClass classify_quiescent(const Position& p);

/// Per node: max over White options equals min over Black options.
std::vector<bool> quiescent_nodes(const RankedValues& x, const GameGraph& g);

struct QuiescenceRecord {
  std::size_t position = 0;
  QuiescenceClass cls = QuiescenceClass::Other;
  std::int32_t t_label = -1;
  std::int32_t t_prime_label = -1;
};

/// Every quiescent position of the space (not only class representatives),
/// with its class and, when a certificate is given, its labels.
std::vector<QuiescenceRecord> quiescent_positions(const RankedValues& x, const Space& space, const SpaceGraph& sg,
                                                  const Certificate* cert = nullptr);

/// Whether all quiescent nodes are in T. When they are, also checks that T
/// then covers every node with x > 0 and throws IntegrityError if not.
bool quiescence_sufficiency_check(const RankedValues& x, const GameGraph& g, const TransientLabels& t);

}  // namespace bidchess
