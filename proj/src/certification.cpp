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

#include "bidchess/certification.hpp"

#include <algorithm>

#include "bidchess/error.hpp"

namespace bidchess {

namespace {

// Reverse adjacency in CSR form.
struct Reverse {
  std::vector<std::uint32_t> offsets;
  std::vector<NodeId> sources;

  std::span<const NodeId> of(NodeId n) const { return {sources.data() + offsets[n], offsets[n + 1] - offsets[n]}; }
};

template <typename Keep>
Reverse reverse_edges(const GameGraph& g, Color mover, Keep keep) {
  Reverse r;
  r.offsets.assign(g.size() + 1, 0);
  for (NodeId p = 0; p < g.size(); ++p) {
    for (NodeId q : g.options(p, mover)) {
      if (keep(p, q)) ++r.offsets[q + 1];
    }
  }
  for (std::size_t i = 1; i < r.offsets.size(); ++i) r.offsets[i] += r.offsets[i - 1];
  r.sources.resize(r.offsets.back());
  std::vector<std::uint32_t> fill(r.offsets.begin(), r.offsets.end() - 1);
  for (NodeId p = 0; p < g.size(); ++p) {
    for (NodeId q : g.options(p, mover)) {
      if (keep(p, q)) r.sources[fill[q]++] = p;
    }
  }
  return r;
}

// Rank of the best option for `mover`: max for White, min for Black.
std::vector<std::uint32_t> best_ranks(const RankedValues& x, const GameGraph& g, Color mover) {
  std::vector<std::uint32_t> best(g.size(), 0);
  for (NodeId p = 0; p < g.size(); ++p) {
    const auto opts = g.options(p, mover);
    if (opts.empty()) continue;
    std::uint32_t b = x.rank[opts[0]];
    for (NodeId q : opts) b = mover == Color::White ? std::max(b, x.rank[q]) : std::min(b, x.rank[q]);
    best[p] = b;
  }
  return best;
}

Color greedy_side(Perspective side) { return side == Perspective::White ? Color::White : Color::Black; }

bool needs_label(const RankedValues& x, NodeId n, Perspective side) {
  const Rational& v = x.pool[x.rank[n]];
  return side == Perspective::White ? v > 0 : v < 1;
}

}  // namespace

TransientLabels compute_transient(const RankedValues& x, const GameGraph& g, Perspective side) {
  if (x.rank.size() != g.size()) throw UsageError("values do not match the graph");
  const Color greedy = greedy_side(side);
  const Color other = opponent(greedy);
  const auto best = best_ranks(x, g, greedy);
  const Reverse via_greedy = reverse_edges(g, greedy, [&](NodeId p, NodeId q) { return x.rank[q] == best[p]; });
  const Reverse via_all = reverse_edges(g, other, [](NodeId, NodeId) { return true; });

  TransientLabels t;
  t.perspective = side;
  t.label.assign(g.size(), -1);
  std::vector<std::uint32_t> remaining(g.size());
  std::vector<NodeId> frontier;
  for (NodeId n = 0; n < g.size(); ++n) {
    remaining[n] = static_cast<std::uint32_t>(g.options(n, other).size());
    if (!g.ongoing(n)) {
      t.label[n] = 0;
      frontier.push_back(n);
    }
  }
  std::int32_t level = 0;
  std::vector<NodeId> next;
  while (!frontier.empty()) {
    next.clear();
    for (NodeId q : frontier) {
      for (NodeId p : via_greedy.of(q)) {
        if (t.label[p] < 0) {
          t.label[p] = level + 1;
          next.push_back(p);
        }
      }
      for (NodeId p : via_all.of(q)) {
        if (--remaining[p] == 0 && t.label[p] < 0) {
          t.label[p] = level + 1;
          next.push_back(p);
        }
      }
    }
    t.labeled += frontier.size();
    if (!next.empty()) ++level;
    std::swap(frontier, next);
  }
  t.max_label = level;
  for (NodeId n = 0; n < g.size(); ++n) {
    if (t.label[n] < 0 && needs_label(x, n, side)) t.uncovered.push_back(n);
  }
  return t;
}

bool labels_sound(const TransientLabels& t, const RankedValues& x, const GameGraph& g) {
  if (t.label.size() != g.size()) return false;
  const Color greedy = greedy_side(t.perspective);
  const Color other = opponent(greedy);
  const auto best = best_ranks(x, g, greedy);
  for (NodeId p = 0; p < g.size(); ++p) {
    const std::int32_t k = t.label[p];
    if (!g.ongoing(p)) {
      if (k != 0) return false;
      continue;
    }
    if (k < 0) continue;
    if (k == 0) return false;
    bool witness = false;
    for (NodeId q : g.options(p, greedy)) {
      witness |= x.rank[q] == best[p] && t.label[q] >= 0 && t.label[q] < k;
    }
    if (!witness) {
      witness = true;
      for (NodeId q : g.options(p, other)) witness &= t.label[q] >= 0 && t.label[q] < k;
    }
    if (!witness) return false;
  }
  return true;
}

Certificate certify(const RankedValues& x, const GameGraph& g) {
  Certificate c;
  c.t = compute_transient(x, g, Perspective::White);
  c.t_prime = compute_transient(x, g, Perspective::Black);
  c.alpha_equals_x = c.t.uncovered.empty();
  c.beta_equals_x = c.t_prime.uncovered.empty();
  return c;
}

std::string_view class_name(QuiescenceClass c) {
  switch (c) {
    case QuiescenceClass::None: return "None";
    case QuiescenceClass::BareKings: return "BareKings";
    case QuiescenceClass::GhostBishop: return "GhostBishop";
    case QuiescenceClass::BlockedPawn: return "BlockedPawn";
    case QuiescenceClass::CorneredKing: return "CorneredKing";
    case QuiescenceClass::Other: return "Other";
  }
  return "?";
}

QuiescenceClass classify_quiescent(const Position& p) {
  if (!p.ongoing()) return QuiescenceClass::Other;
  const std::string id = p.origin_piece_set().id();
  const Square bk = *p.king(Color::Black);
  const Square wk = *p.king(Color::White);
  if (id == "Kk") return QuiescenceClass::BareKings;
  for (const Placement& pl : p.placements()) {
    if (pl.piece.color != Color::White) continue;
    const Square s = pl.square;
    if (id == "KBk" && pl.piece.kind == Kind::Bishop) {
      if ((s.file + s.rank) % 2 != (bk.file + bk.rank) % 2) return QuiescenceClass::GhostBishop;
    }
    if (id == "KPk" && pl.piece.kind == Kind::Pawn) {
      if (bk.file == s.file && bk.rank > s.rank) return QuiescenceClass::BlockedPawn;
      const bool edge = wk.file == 0 || wk.file == p.dims().files - 1;
      if (edge && wk.file == s.file && wk.rank > s.rank && s.rank >= p.dims().ranks - 3) {
        return QuiescenceClass::CorneredKing;
      }
    }
  }
  return QuiescenceClass::Other;
}

std::vector<bool> quiescent_nodes(const RankedValues& x, const GameGraph& g) {
  const auto max_w = best_ranks(x, g, Color::White);
  const auto min_b = best_ranks(x, g, Color::Black);
  std::vector<bool> out(g.size(), false);
  for (NodeId n = 0; n < g.size(); ++n) out[n] = g.ongoing(n) && max_w[n] == min_b[n];
  return out;
}

std::vector<QuiescenceRecord> quiescent_positions(const RankedValues& x, const Space& space, const SpaceGraph& sg,
                                                  const Certificate* cert) {
  const auto quiet = quiescent_nodes(x, sg.graph);
  std::vector<QuiescenceRecord> out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const NodeId n = sg.node_of[i];
    if (!quiet[n]) continue;
    QuiescenceRecord r;
    r.position = i;
    r.cls = classify_quiescent(space.position(i));
    if (cert) {
      r.t_label = cert->t.label[n];
      r.t_prime_label = cert->t_prime.label[n];
    }
    out.push_back(r);
  }
  return out;
}

bool quiescence_sufficiency_check(const RankedValues& x, const GameGraph& g, const TransientLabels& t) {
  if (t.perspective != Perspective::White) throw UsageError("sufficiency is stated for White's T");
  const auto quiet = quiescent_nodes(x, g);
  for (NodeId n = 0; n < g.size(); ++n) {
    if (quiet[n] && t.label[n] < 0) return false;
  }
  if (!t.uncovered.empty()) {
    throw IntegrityError("all quiescent positions are in T but " + std::to_string(t.uncovered.size()) +
                         " positions with x > 0 are not");
  }
  return true;
}

}  // namespace bidchess
