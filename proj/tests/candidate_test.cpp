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
#include "bidchess/error.hpp"
#include "bidchess/fen.hpp"
#include "bidchess/solver.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bidchess;

TEST_CASE("rank_values sorts and deduplicates") {
  const std::vector<Rational> v{Rational(1, 2), Rational(0), Rational(3, 4), Rational(1, 2), Rational(1)};
  const RankedValues r = rank_values(v);
  CHECK(r.pool == std::vector<Rational>{0, Rational(1, 2), Rational(3, 4), 1});
  CHECK(r.rank == std::vector<std::uint32_t>{1, 0, 2, 1, 3});
}

TEST_CASE("constant one half is a Richman function for bare kings") {
  const Problem problem(BoardDims{4, 4}, {PieceSet::parse("Kk")}, false);
  const auto& g = problem.graph().graph;
  CandidateFunction c;
  for (NodeId i = 0; i < g.size(); ++i) {
    c.values.push_back(g.outcome(i) == Status::WhiteWon ? Rational(1) : g.outcome(i) == Status::BlackWon ? Rational(0) : Rational(1, 2));
  }
  CHECK(graph_violations(c, g) == 0);
  const ViolationReport r = check_candidate(c, problem.space(), problem.graph());
  CHECK(r.count == 0);
  CHECK(c.violations == 0);
  CHECK(r.checked == problem.space().size());
}

TEST_CASE("a perturbed limit is caught by both checks") {
  const Problem problem(BoardDims{4, 4}, {PieceSet::parse("KNk")}, true);
  Thresholds t = init_both(problem, 64);
  advance(t, problem, 64);
  CandidateFunction c = build_candidate(t.alpha, t.beta, problem.graph().graph);
  const Position p = parse_fen("4x4/3k/4/4/K2N");
  CHECK(graph_violations(c, problem.graph().graph) == 0);
  CHECK(check_candidate(c, problem.space(), problem.graph()).count == 0);
  CHECK(c.values[problem.node(p)] == Rational(31, 48));
  CHECK(residual(c, problem.space(), problem.graph(), p) == 0);

  c.values[problem.node(p)] += Rational(1, 1000);
  CHECK(graph_violations(c, problem.graph().graph) >= 1);
  const ViolationReport r = check_candidate(c, problem.space(), problem.graph());
  CHECK(r.count >= 1);
  CHECK(std::find(r.positions.begin(), r.positions.end(), problem.space().require_index(p)) != r.positions.end());
  CHECK(residual(c, problem.space(), problem.graph(), p) == Rational(1, 1000));

  CHECK_THROWS_AS(residual(c, problem.space(), problem.graph(), parse_fen("4x4/3N/4/4/K3")), UsageError);
  CHECK_THROWS_AS(residual(c, problem.space(), problem.graph(), parse_fen("4x4/3k/4/4/K2R")), LookupError);
}

TEST_CASE("the candidate is the simplest rational between the thresholds") {
  const Problem problem(BoardDims{3, 4}, {PieceSet::parse("KNk")}, false);
  Thresholds t = init_both(problem, 20);
  advance(t, problem, 20);
  const CandidateFunction c = build_candidate(t.alpha, t.beta, problem.graph().graph);
  for (NodeId i = 0; i < problem.graph().graph.size(); ++i) {
    REQUIRE(t.alpha.value(i) <= c.values[i]);
    REQUIRE(c.values[i] <= t.beta.value(i));
    CHECK(c.values[i] == simplest_in_interval(t.alpha.value(i), t.beta.value(i)));
  }
  Thresholds other = init_both(problem, 20);
  advance(other, problem, 19);
  CHECK_THROWS_AS(build_candidate(t.alpha, other.beta, problem.graph().graph), UsageError);
}
