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
#include <span>
#include <vector>

#include "bidchess/game_graph.hpp"
#include "bidchess/rational.hpp"
#include "bidchess/space.hpp"
#include "bidchess/thresholds.hpp"

namespace bidchess {

/// Distinct values in ascending order plus, per entry, its rank in that
/// order. Ranks turn the many exact max/min/equality tests of certification
/// into integer comparisons.
struct RankedValues {
  std::vector<Rational> pool;
  std::vector<std::uint32_t> rank;
};

RankedValues rank_values(std::span<const Rational> values);

/// A candidate limit s_n: one rational per graph node.
struct CandidateFunction {
  std::size_t n = 0;
  std::vector<Rational> values;
  /// Filled in by check_candidate; SIZE_MAX until then.
  std::size_t violations = static_cast<std::size_t>(-1);
};

/// s_n(P) = simplest rational in [alpha_n(P), beta_n(P)]; terminals are
/// exactly 0 or 1. Throws UsageError if the vectors do not match.
CandidateFunction build_candidate(const ThresholdVector& alpha, const ThresholdVector& beta, const GameGraph& g);

struct ViolationReport {
  std::size_t checked = 0;
  std::size_t count = 0;
  /// Position indices of the first `max_listed` violations, ascending.
  std::vector<std::size_t> positions;
};

struct ViolationOptions {
  /// Check every position, not just one per symmetry class.
  bool all_positions = true;
  std::size_t max_listed = 1000;
};

/// Checks x(P) = (max_w x(P_w) + min_b x(P_b)) / 2 at every ongoing
/// position, generating the options afresh with the move generator instead
/// of trusting the graph, and x = 0/1 at terminals.
ViolationReport richman_violations(const CandidateFunction& c, const Space& space, const SpaceGraph& sg,
                                   const ViolationOptions& opts = {});

/// Same equation over the graph's adjacency; cheap enough to scan every n.
std::size_t graph_violations(const CandidateFunction& c, const GameGraph& g);

/// x(P) - (max_w x(P_w) + min_b x(P_b)) / 2 with options from the move
/// generator. Throws UsageError on terminal positions, LookupError outside
/// the space.
Rational residual(const CandidateFunction& c, const Space& space, const SpaceGraph& sg, const Position& p);

/// Runs richman_violations and stores the count in `c`.
ViolationReport check_candidate(CandidateFunction& c, const Space& space, const SpaceGraph& sg,
                                const ViolationOptions& opts = {});

}  // namespace bidchess
