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
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "bidchess/game_graph.hpp"
#include "bidchess/kernels.hpp"
#include "bidchess/rational.hpp"

namespace bidchess {

enum class ThresholdKind : std::uint8_t { Alpha, Beta };

std::string_view kind_name(ThresholdKind k);
ThresholdKind parse_kind(std::string_view s);

/// Finite-n thresholds alpha_n or beta_n for every node of a game graph.
///
/// Values are dyadic with denominator 2^n. They are held as fixed-point rows
/// (see kernels.hpp) wide enough for every n up to `capacity()`, so one
/// step is a compare-select over options plus one add-and-shift.
class ThresholdVector {
 public:
  ThresholdVector() = default;
  ThresholdVector(ThresholdKind kind, std::size_t nodes, std::size_t capacity_n);

  ThresholdKind kind() const { return kind_; }
  std::size_t n() const { return n_; }
  std::size_t size() const { return nodes_; }
  std::size_t stride() const { return stride_; }
  /// Largest n these rows can represent exactly.
  std::size_t capacity() const { return stride_ * 64 - 1; }

  /// Numerator at scale 2^n; lies in [0, 2^n].
  BigInt numerator(NodeId i) const;
  Rational value(NodeId i) const;
  /// Requires 0 <= num <= 2^n; throws UsageError otherwise.
  void set_numerator(NodeId i, const BigInt& num);
  void set_n(std::size_t n);
  /// Widens the rows so capacity() >= capacity_n; values are unchanged.
  void reserve(std::size_t capacity_n);

  std::span<const kernels::Limb> row(NodeId i) const { return {rows_.data() + i * stride_, stride_}; }
  kernels::Limb key(NodeId i) const { return keys_[i]; }

  /// Lowest limb that can be nonzero at iteration `n`.
  std::size_t low_limb(std::size_t n) const;

  bool operator==(const ThresholdVector& o) const;

 private:
  friend void step_into(const ThresholdVector& in, ThresholdVector& out, const GameGraph& g, unsigned threads);
  friend ThresholdVector init_thresholds(ThresholdKind kind, const GameGraph& g, std::size_t capacity_n);

  void set_one(NodeId i);

  ThresholdKind kind_ = ThresholdKind::Alpha;
  std::size_t n_ = 0;
  std::size_t nodes_ = 0;
  std::size_t stride_ = 1;
  std::vector<kernels::Limb> rows_;
  std::vector<kernels::Limb> keys_;
};

/// n = 0 thresholds: alpha is 0 except at White-won terminals; beta is 1
/// except at Black-won terminals.
ThresholdVector init_thresholds(ThresholdKind kind, const GameGraph& g, std::size_t capacity_n);

/// One application of
///   v_{n+1}(P) = (max_w v_n(P_w) + min_b v_n(P_b)) / 2
/// at every ongoing node; terminals keep their boundary values. `out` is
/// reused as storage when it has the same shape. Results do not depend on
/// `threads`. Throws UsageError past capacity().
void step_into(const ThresholdVector& in, ThresholdVector& out, const GameGraph& g, unsigned threads = 1);
ThresholdVector step(const ThresholdVector& in, const GameGraph& g);

struct RunOptions {
  std::size_t n_target = 0;
  std::size_t checkpoint_every = 100;
  /// Called with the vector after every `checkpoint_every` steps and at the
  /// end.
  std::function<void(const ThresholdVector&)> on_checkpoint;
  unsigned threads = 1;
  /// Assert the monotone sandwich after every step (UsageError on failure).
  bool check_monotone = false;
};

/// Advances `v` in place until v.n() == opts.n_target, widening it first if
/// needed.
void run_to(ThresholdVector& v, const GameGraph& g, const RunOptions& opts);
ThresholdVector run(const GameGraph& g, ThresholdKind kind, const RunOptions& opts);

/// Whether `next` is the monotone successor of `prev`: alpha never
/// decreases, beta never increases.
bool monotone_step(const ThresholdVector& prev, const ThresholdVector& next);

/// max over nodes of beta_n - alpha_n, exact. Throws UsageError if the
/// vectors disagree in n, size or kind, or if some alpha exceeds its beta.
Rational gap(const ThresholdVector& alpha, const ThresholdVector& beta);

}  // namespace bidchess
