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
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <json.hpp>
#include <vector>

#include "bidchess/candidate.hpp"
#include "bidchess/certification.hpp"
#include "bidchess/space.hpp"
#include "bidchess/table.hpp"
#include "bidchess/thresholds.hpp"

namespace bidchess {

/// A closed position space and its option graph.
class Problem {
 public:
  /// Builds the closure of `roots` on `dims`. With `symmetry`, positions
  /// related by a board symmetry share one graph node.
  Problem(BoardDims dims, std::vector<PieceSet> roots, bool symmetry);

  const Space& space() const { return *space_; }
  std::shared_ptr<const Space> shared_space() const { return space_; }
  const SpaceGraph& graph() const { return graph_; }
  const std::vector<PieceSet>& roots() const { return roots_; }

  /// Graph node of a position; throws LookupError outside the space.
  NodeId node(const Position& p) const { return graph_.node_of[space_->require_index(p)]; }

 private:
  std::vector<PieceSet> roots_;
  std::shared_ptr<const Space> space_;
  SpaceGraph graph_;
};

/// The eight-by-eight roots used when no piece sets are named: every
/// three-piece set with the extra piece White's.
std::vector<PieceSet> default_roots();

/// Parses "KRk", "KRk,KBk" or "all".
std::vector<PieceSet> parse_roots(std::string_view text);

struct Thresholds {
  ThresholdVector alpha;
  ThresholdVector beta;

  std::size_t n() const { return alpha.n(); }
};

struct IterateOptions {
  unsigned threads = 1;
  std::size_t checkpoint_every = 100;
  /// Writes alpha.ckpt and beta.ckpt here at every checkpoint when set.
  std::optional<std::filesystem::path> checkpoint_dir;
  /// Check the monotone sandwich after every step.
  bool check_monotone = true;
  /// Called after every checkpoint with the vector just written.
  std::function<void(const ThresholdVector&)> progress;
};

Thresholds init_both(const Problem& problem, std::size_t capacity_n);
/// Advances both vectors to `n_target`.
void advance(Thresholds& t, const Problem& problem, std::size_t n_target, const IterateOptions& opts = {});
/// Loads alpha.ckpt and beta.ckpt from `dir`; throws UsageError when they do
/// not belong to `problem` or disagree in n.
Thresholds resume(const Problem& problem, const std::filesystem::path& dir);

struct CertifyOutcome {
  CandidateFunction candidate;
  ViolationReport violations;
  RankedValues ranked;
  /// Only computed when there are no violations.
  std::optional<Certificate> certificate;
  std::vector<QuiescenceRecord> quiescent;
  bool quiescence_sufficient = false;
  bool labels_sound = false;

  bool certified() const {
    return violations.count == 0 && certificate && certificate->alpha_equals_x && certificate->beta_equals_x;
  }
};

/// s_n, the board-level violation check and, when that passes, T, T' and
/// the quiescent census.
CertifyOutcome certify_thresholds(const Problem& problem, const Thresholds& t, const ViolationOptions& opts = {});

/// Table of a certified outcome; throws UsageError when not certified.
RichmanTable to_table(const Problem& problem, const CertifyOutcome& outcome);

/// Certification report. Coverage and label histograms per piece set, then
/// the quiescent census by class.
nlohmann::json certification_report(const Problem& problem, const CertifyOutcome& outcome);

/// Iterates from scratch to `n` and certifies; the one-call pipeline.
CertifyOutcome solve(const Problem& problem, std::size_t n, const IterateOptions& opts = {});

}  // namespace bidchess
