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

#include "bidchess/board.hpp"
#include "bidchess/space.hpp"

namespace bidchess {

using NodeId = std::uint32_t;

/// A finite two-player game with move options pre-resolved to node indices.
/// Ongoing nodes have at least one option for each side; terminal nodes have
/// none. Option lists are sorted and free of duplicates.
class GameGraph {
 public:
  GameGraph() = default;

  /// Builds from explicit adjacency lists. Throws UsageError when an ongoing
  /// node lacks options, a terminal node has some, or a target is out of
  /// range.
  static GameGraph from_lists(std::vector<Status> outcomes, const std::vector<std::vector<NodeId>>& white,
                              const std::vector<std::vector<NodeId>>& black);

  std::size_t size() const { return outcome_.size(); }
  Status outcome(NodeId n) const { return outcome_[n]; }
  bool ongoing(NodeId n) const { return outcome_[n] == Status::Ongoing; }
  std::span<const Status> outcomes() const { return outcome_; }

  std::span<const NodeId> white(NodeId n) const {
    return {white_targets_.data() + white_offsets_[n], white_offsets_[n + 1] - white_offsets_[n]};
  }
  std::span<const NodeId> black(NodeId n) const {
    return {black_targets_.data() + black_offsets_[n], black_offsets_[n + 1] - black_offsets_[n]};
  }
  std::span<const NodeId> options(NodeId n, Color mover) const { return mover == Color::White ? white(n) : black(n); }

  std::span<const std::uint32_t> white_offsets() const { return white_offsets_; }
  std::span<const NodeId> white_targets() const { return white_targets_; }
  std::span<const std::uint32_t> black_offsets() const { return black_offsets_; }
  std::span<const NodeId> black_targets() const { return black_targets_; }

  std::size_t edge_count() const { return white_targets_.size() + black_targets_.size(); }

 private:
  friend class GraphBuilder;

  std::vector<Status> outcome_;
  std::vector<std::uint32_t> white_offsets_{0};
  std::vector<NodeId> white_targets_;
  std::vector<std::uint32_t> black_offsets_{0};
  std::vector<NodeId> black_targets_;
};

/// A GameGraph over a Space, optionally quotiented by board symmetry (each
/// node is one symmetry class, represented by its lowest-index member).
struct SpaceGraph {
  GameGraph graph;
  std::vector<NodeId> node_of;               ///< per position index
  std::vector<std::size_t> representative;   ///< per node, a position index
  bool symmetric = false;
};

/// Resolves every option of every position through `space`. Throws
/// UsageError if an option leaves the space (the space is not closed) or an
/// ongoing position has no option.
SpaceGraph build_space_graph(const Space& space, bool use_symmetry = false);

}  // namespace bidchess
