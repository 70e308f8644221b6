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

#include "bidchess/analytics.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>

#include "bidchess/error.hpp"
#include "bidchess/fen.hpp"

namespace bidchess {

std::string_view class_name(PositionClass c) {
  switch (c) {
    case PositionClass::Normal: return "Normal";
    case PositionClass::Zugzwang: return "Zugzwang";
    case PositionClass::Quiescent: return "Quiescent";
  }
  return "?";
}

std::string_view trace_end_name(TraceEnd e) {
  switch (e) {
    case TraceEnd::WhiteWon: return "WhiteWon";
    case TraceEnd::BlackWon: return "BlackWon";
    case TraceEnd::Cycle: return "Cycle";
    case TraceEnd::CoinsExhausted: return "CoinsExhausted";
  }
  return "?";
}

namespace {

// Unlabeled sorts after every label.
std::int64_t label_key(std::int32_t label) {
  return label < 0 ? std::numeric_limits<std::int64_t>::max() : label;
}

// Whether `a` beats `b` as a greedy choice for `mover`.
bool better(const MoveValue& a, const MoveValue& b, Color mover) {
  if (a.value != b.value) return mover == Color::White ? a.value > b.value : a.value < b.value;
  const auto la = label_key(mover == Color::White ? a.t_label : a.t_prime_label);
  const auto lb = label_key(mover == Color::White ? b.t_label : b.t_prime_label);
  return la < lb;
}

}  // namespace

std::vector<MoveValue> option_values(const RichmanTable& t, const Position& p, Color mover) {
  std::vector<MoveValue> out;
  for (Option& o : options(p, mover)) {
    const RichmanTable::Entry e = t.lookup(o.result);
    out.push_back({o.move, describe_move(p, o.move), std::move(o.result), e.value, e.t_label, e.t_prime_label});
  }
  return out;
}

MoveValue greedy_option(const RichmanTable& t, const Position& p, Color mover) {
  auto opts = option_values(t, p, mover);
  std::size_t best = 0;
  for (std::size_t i = 1; i < opts.size(); ++i) {
    if (better(opts[i], opts[best], mover)) best = i;
  }
  return std::move(opts[best]);
}

PositionReport report(const RichmanTable& t, const Position& p) {
  if (!p.ongoing()) throw UsageError("report of a terminal position");
  const RichmanTable::Entry e = t.lookup(p);
  PositionReport r;
  r.position = p;
  r.value = e.value;
  r.qclass = e.qclass;
  r.t_label = e.t_label;
  r.t_prime_label = e.t_prime_label;
  r.white_moves = option_values(t, p, Color::White);
  r.black_moves = option_values(t, p, Color::Black);
  r.max_white = r.white_moves.front().value;
  for (const auto& m : r.white_moves) r.max_white = std::max(r.max_white, m.value);
  r.min_black = r.black_moves.front().value;
  for (const auto& m : r.black_moves) r.min_black = std::min(r.min_black, m.value);
  for (const auto& m : r.white_moves) {
    if (m.value == r.max_white) r.best_white.push_back(m);
  }
  for (const auto& m : r.black_moves) {
    if (m.value == r.min_black) r.best_black.push_back(m);
  }
  r.richman_bid_white = (r.max_white - r.min_black) / 2;
  if (r.max_white == r.min_black) {
    r.cls = PositionClass::Quiescent;
  } else if (r.max_white < r.value && r.value < r.min_black) {
    r.cls = PositionClass::Zugzwang;
  }
  return r;
}

std::vector<std::size_t> zugzwang_census(const RichmanTable& t) {
  const Space& space = t.space();
  const auto& id = t.columns().value_id;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const Position& p = space.position(i);
    if (!p.ongoing()) continue;
    std::uint32_t max_w = 0, min_b = std::numeric_limits<std::uint32_t>::max();
    for (const Option& o : white_options(p)) max_w = std::max(max_w, id[space.require_index(o.result)]);
    for (const Option& o : black_options(p)) min_b = std::min(min_b, id[space.require_index(o.result)]);
    if (max_w < id[i] && id[i] < min_b) out.push_back(i);
  }
  return out;
}

BigInt Factorization::product() const {
  BigInt out = cofactor;
  for (const auto& [p, k] : factors) {
    for (unsigned i = 0; i < k; ++i) out *= p;
  }
  return out;
}

unsigned long two_adic_valuation(const BigInt& n) {
  if (n <= 0) throw UsageError("2-adic valuation needs a positive integer");
  return mpz_scan1(n.get_mpz_t(), 0);
}

Factorization trial_factor(const BigInt& n, unsigned long bound) {
  if (n <= 0) throw UsageError("can only factor positive integers");
  Factorization f;
  BigInt rest = n;
  auto take = [&](unsigned long d) {
    unsigned k = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++k;
    }
    if (k) f.factors.emplace_back(BigInt(d), k);
  };
  take(2);
  unsigned long d = 3;
  for (; d <= bound && rest > 1; d += 2) {
    if (BigInt(d) * d > rest) break;
    take(d);
  }
  if (rest > 1 && BigInt(d) * d > rest) {
    f.factors.emplace_back(rest, 1);
    rest = 1;
  }
  f.cofactor = rest;
  return f;
}

bool DenominatorCensus::divisible_somewhere(unsigned long p) const {
  for (const auto& [den, count] : denominators) {
    if (mpz_divisible_ui_p(den.get_mpz_t(), p)) return true;
  }
  return false;
}

DenominatorCensus denominator_census(const RichmanTable& t, const PieceSet& set, unsigned long trial_bound) {
  const SpaceBlock* block = nullptr;
  for (const SpaceBlock& b : t.space().blocks()) {
    if (b.set == set) block = &b;
  }
  if (!block) throw LookupError("piece set " + set.id() + " is not in the table");
  DenominatorCensus c;
  c.piece_set = set.id();
  for (std::size_t i = block->begin; i < block->begin + block->ongoing; ++i) {
    ++c.denominators[t.value_at(i).get_den()];
  }
  if (!c.denominators.empty()) c.max_denominator = c.denominators.rbegin()->first;
  c.max_factors = trial_factor(c.max_denominator, trial_bound);
  return c;
}

PromotionReport promotion_report(const RichmanTable& t, const Position& p) {
  if (!p.ongoing()) throw UsageError("promotion report of a terminal position");
  std::optional<Square> pawn;
  for (const Placement& pl : p.placements()) {
    if (pl.piece == Piece{Color::White, Kind::Pawn} && pl.square.rank == p.dims().ranks - 2) pawn = pl.square;
  }
  if (!pawn) throw UsageError("White has no pawn on its seventh rank");
  PromotionReport r;
  r.from = *pawn;
  for (const MoveValue& m : option_values(t, p, Color::White)) {
    if (m.move.from == *pawn && m.move.promotion) r.choices.push_back({m.move, m.text, m.value});
  }
  if (r.choices.empty()) throw UsageError("the pawn on the seventh rank cannot promote");
  const PromotionChoice* best = &r.choices.front();
  for (const auto& c : r.choices) {
    if (c.value > best->value || (c.value == best->value && c.move.promotion == Kind::Knight)) best = &c;
  }
  r.preferred = *best->move.promotion;
  return r;
}

namespace {

// Greedy successors over table indices, computed on first use.
class GreedyWalker {
 public:
  explicit GreedyWalker(const RichmanTable& t) : t_(t) {
    next_[0].assign(t.size(), kUnknown);
    next_[1].assign(t.size(), kUnknown);
  }

  std::size_t step(std::size_t i, Color mover) {
    std::size_t& slot = next_[mover == Color::White ? 0 : 1][i];
    if (slot == kUnknown) slot = compute(i, mover);
    return slot;
  }

 private:
  static constexpr std::size_t kUnknown = std::numeric_limits<std::size_t>::max();

  std::size_t compute(std::size_t i, Color mover) const {
    const Space& space = t_.space();
    const auto& c = t_.columns();
    std::size_t best = kUnknown;
    for (const Option& o : options(space.position(i), mover)) {
      const std::size_t j = space.require_index(o.result);
      if (best == kUnknown) {
        best = j;
        continue;
      }
      const bool white = mover == Color::White;
      if (c.value_id[j] != c.value_id[best]) {
        if (white ? c.value_id[j] > c.value_id[best] : c.value_id[j] < c.value_id[best]) best = j;
        continue;
      }
      const auto& labels = white ? c.t_label : c.t_prime_label;
      if (label_key(labels[j]) < label_key(labels[best])) best = j;
    }
    return best;
  }

  const RichmanTable& t_;
  std::vector<std::size_t> next_[2];
};

}  // namespace

SimulationResult random_turn_simulate(const RichmanTable& t, const Position& p, std::size_t trials, std::size_t horizon,
                                      std::uint64_t seed) {
  const RichmanTable::Entry start = t.lookup(p);
  // a flipped start is simulated in the table's orientation with the roles
  // swapped
  const Color white = start.flipped ? Color::Black : Color::White;
  GreedyWalker walker(t);
  std::mt19937_64 rng(seed);
  SimulationResult r;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::size_t i = start.index;
    std::size_t ply = 0;
    while (t.space().position(i).ongoing() && ply < horizon) {
      const Color mover = (rng() & 1) ? Color::White : Color::Black;
      i = walker.step(i, mover);
      ++ply;
    }
    const Status s = t.space().position(i).status();
    if (s == Status::Ongoing) {
      ++r.unresolved;
    } else if ((s == Status::WhiteWon) == (white == Color::White)) {
      ++r.white_wins;
    } else {
      ++r.black_wins;
    }
  }
  return r;
}

Trace forced_sequence_trace(const RichmanTable& t, const Position& p, std::string_view coins) {
  const bool repeat = !coins.empty() && coins.back() == '*';
  if (repeat) coins.remove_suffix(1);
  if (coins.empty()) throw ParseError("empty coin sequence");
  for (char c : coins) {
    if (c != 'W' && c != 'B') throw ParseError("coin sequence may hold only W and B, optionally ending in *");
  }
  Trace trace;
  Position cur = p;
  std::map<std::pair<std::string, std::size_t>, std::size_t> seen;
  std::size_t k = 0;
  while (cur.ongoing()) {
    if (!repeat && k == coins.size()) {
      trace.end = TraceEnd::CoinsExhausted;
      return trace;
    }
    const std::size_t phase = k % coins.size();
    if (repeat) {
      auto key = std::make_pair(emit_fen(cur), phase);
      if (auto it = seen.find(key); it != seen.end()) {
        trace.end = TraceEnd::Cycle;
        trace.cycle_start = it->second;
        return trace;
      }
      seen.emplace(std::move(key), trace.steps.size());
    }
    const Color mover = coins[phase] == 'W' ? Color::White : Color::Black;
    MoveValue m = greedy_option(t, cur, mover);
    trace.steps.push_back({mover, m.move, m.text, m.result, m.value});
    cur = std::move(m.result);
    ++k;
  }
  trace.end = cur.status() == Status::WhiteWon ? TraceEnd::WhiteWon : TraceEnd::BlackWon;
  return trace;
}

}  // namespace bidchess
