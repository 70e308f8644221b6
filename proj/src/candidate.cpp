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

#include "bidchess/candidate.hpp"

#include <algorithm>
#include <numeric>

#include "bidchess/error.hpp"

namespace bidchess {

RankedValues rank_values(std::span<const Rational> values) {
  std::vector<std::uint32_t> order(values.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return values[a] < values[b]; });
  RankedValues out;
  out.rank.resize(values.size());
  for (std::uint32_t i : order) {
    if (out.pool.empty() || out.pool.back() != values[i]) out.pool.push_back(values[i]);
    out.rank[i] = static_cast<std::uint32_t>(out.pool.size() - 1);
  }
  return out;
}

CandidateFunction build_candidate(const ThresholdVector& alpha, const ThresholdVector& beta, const GameGraph& g) {
  if (alpha.kind() != ThresholdKind::Alpha || beta.kind() != ThresholdKind::Beta) {
    throw UsageError("build_candidate needs an alpha and a beta vector");
  }
  if (alpha.n() != beta.n() || alpha.size() != g.size() || beta.size() != g.size()) {
    throw UsageError("threshold vectors do not match the graph");
  }
  CandidateFunction c;
  c.n = alpha.n();
  c.values.resize(g.size());
  for (NodeId i = 0; i < g.size(); ++i) {
    switch (g.outcome(i)) {
      case Status::WhiteWon: c.values[i] = 1; break;
      case Status::BlackWon: c.values[i] = 0; break;
      case Status::Ongoing:
        c.values[i] = simplest_in_dyadic_interval(alpha.numerator(i), beta.numerator(i), c.n);
        break;
    }
  }
  return c;
}

namespace {

bool terminal_ok(Status s, const Rational& x) {
  return s == Status::WhiteWon ? x == 1 : x == 0;
}

struct Extremes {
  const Rational* max_w = nullptr;
  const Rational* min_b = nullptr;
};

Extremes extremes_from_moves(const CandidateFunction& c, const Space& space, const SpaceGraph& sg, const Position& p) {
  Extremes e;
  for (const Option& o : white_options(p)) {
    const Rational& v = c.values[sg.node_of[space.require_index(o.result)]];
    if (!e.max_w || v > *e.max_w) e.max_w = &v;
  }
  for (const Option& o : black_options(p)) {
    const Rational& v = c.values[sg.node_of[space.require_index(o.result)]];
    if (!e.min_b || v < *e.min_b) e.min_b = &v;
  }
  if (!e.max_w || !e.min_b) throw UsageError("ongoing position without options: " + std::to_string(space.index_of(p).value_or(0)));
  return e;
}

bool satisfied(const Rational& x, const Extremes& e) {
  return 2 * x == *e.max_w + *e.min_b;
}

}  // namespace

ViolationReport richman_violations(const CandidateFunction& c, const Space& space, const SpaceGraph& sg,
                                   const ViolationOptions& opts) {
  if (c.values.size() != sg.graph.size() || sg.node_of.size() != space.size()) {
    throw UsageError("candidate does not match the space");
  }
  ViolationReport r;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const NodeId node = sg.node_of[i];
    if (!opts.all_positions && sg.representative[node] != i) continue;
    const Position& p = space.position(i);
    const Rational& x = c.values[node];
    ++r.checked;
    const bool ok = p.ongoing() ? satisfied(x, extremes_from_moves(c, space, sg, p)) : terminal_ok(p.status(), x);
    if (!ok) {
      ++r.count;
      if (r.positions.size() < opts.max_listed) r.positions.push_back(i);
    }
  }
  return r;
}

std::size_t graph_violations(const CandidateFunction& c, const GameGraph& g) {
  if (c.values.size() != g.size()) throw UsageError("candidate does not match the graph");
  std::size_t count = 0;
  for (NodeId i = 0; i < g.size(); ++i) {
    if (!g.ongoing(i)) {
      count += !terminal_ok(g.outcome(i), c.values[i]);
      continue;
    }
    const Rational* max_w = nullptr;
    const Rational* min_b = nullptr;
    for (NodeId t : g.white(i)) {
      if (!max_w || c.values[t] > *max_w) max_w = &c.values[t];
    }
    for (NodeId t : g.black(i)) {
      if (!min_b || c.values[t] < *min_b) min_b = &c.values[t];
    }
    count += 2 * c.values[i] != *max_w + *min_b;
  }
  return count;
}

Rational residual(const CandidateFunction& c, const Space& space, const SpaceGraph& sg, const Position& p) {
  if (!p.ongoing()) throw UsageError("residual of a terminal position");
  const std::size_t i = space.require_index(p);
  const Extremes e = extremes_from_moves(c, space, sg, p);
  return c.values[sg.node_of[i]] - (*e.max_w + *e.min_b) / 2;
}

ViolationReport check_candidate(CandidateFunction& c, const Space& space, const SpaceGraph& sg,
                                const ViolationOptions& opts) {
  ViolationReport r = richman_violations(c, space, sg, opts);
  c.violations = r.count;
  return r;
}

}  // namespace bidchess
