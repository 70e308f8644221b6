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

#include "bidchess/game_graph.hpp"

#include <algorithm>
#include <limits>

#include "bidchess/error.hpp"

namespace bidchess {

class GraphBuilder {
 public:
  explicit GraphBuilder(GameGraph& g) : g_(g) {}

  void add(Status outcome, std::vector<NodeId>& white, std::vector<NodeId>& black) {
    const NodeId id = static_cast<NodeId>(g_.outcome_.size());
    const bool live = outcome == Status::Ongoing;
    if (live && (white.empty() || black.empty())) {
      throw UsageError("ongoing node " + std::to_string(id) + " has an empty option list");
    }
    if (!live && (!white.empty() || !black.empty())) {
      throw UsageError("terminal node " + std::to_string(id) + " has options");
    }
    g_.outcome_.push_back(outcome);
    append(white, g_.white_targets_, g_.white_offsets_);
    append(black, g_.black_targets_, g_.black_offsets_);
  }

 private:
  static void append(std::vector<NodeId>& targets, std::vector<NodeId>& dst, std::vector<std::uint32_t>& offsets) {
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    dst.insert(dst.end(), targets.begin(), targets.end());
    if (dst.size() > std::numeric_limits<std::uint32_t>::max()) throw UsageError("game graph too large");
    offsets.push_back(static_cast<std::uint32_t>(dst.size()));
  }

  GameGraph& g_;
};

GameGraph GameGraph::from_lists(std::vector<Status> outcomes, const std::vector<std::vector<NodeId>>& white,
                                const std::vector<std::vector<NodeId>>& black) {
  if (white.size() != outcomes.size() || black.size() != outcomes.size()) {
    throw UsageError("adjacency lists do not match the node count");
  }
  GameGraph g;
  GraphBuilder b(g);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    std::vector<NodeId> w = white[i], bl = black[i];
    for (NodeId t : w) {
      if (t >= outcomes.size()) throw UsageError("option target out of range");
    }
    for (NodeId t : bl) {
      if (t >= outcomes.size()) throw UsageError("option target out of range");
    }
    b.add(outcomes[i], w, bl);
  }
  return g;
}

SpaceGraph build_space_graph(const Space& space, bool use_symmetry) {
  constexpr NodeId kUnassigned = std::numeric_limits<NodeId>::max();
  SpaceGraph sg;
  sg.symmetric = use_symmetry;
  sg.node_of.assign(space.size(), kUnassigned);

  for (std::size_t i = 0; i < space.size(); ++i) {
    if (sg.node_of[i] != kUnassigned) continue;
    const NodeId node = static_cast<NodeId>(sg.representative.size());
    sg.representative.push_back(i);
    sg.node_of[i] = node;
    if (!use_symmetry) continue;
    for (const Position& img : symmetry_images(space.position(i))) {
      const std::size_t j = space.require_index(img);
      sg.node_of[j] = node;
    }
  }

  GraphBuilder builder(sg.graph);
  std::vector<NodeId> white, black;
  auto resolve = [&](const Position& p, Color mover, std::vector<NodeId>& out) {
    out.clear();
    for (const Option& o : options(p, mover)) {
      auto idx = space.index_of(o.result);
      if (!idx) throw UsageError("space is not closed: option " + o.move.uci() + " leaves it");
      out.push_back(sg.node_of[*idx]);
    }
  };
  for (std::size_t rep : sg.representative) {
    const Position& p = space.position(rep);
    if (p.ongoing()) {
      resolve(p, Color::White, white);
      resolve(p, Color::Black, black);
    } else {
      white.clear();
      black.clear();
    }
    builder.add(p.status(), white, black);
  }
  return sg;
}

}  // namespace bidchess
