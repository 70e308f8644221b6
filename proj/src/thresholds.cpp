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

#include "bidchess/thresholds.hpp"

#include <algorithm>
#include <thread>

#include "bidchess/error.hpp"

namespace bidchess {

using kernels::Limb;

std::string_view kind_name(ThresholdKind k) { return k == ThresholdKind::Alpha ? "alpha" : "beta"; }

ThresholdKind parse_kind(std::string_view s) {
  if (s == "alpha") return ThresholdKind::Alpha;
  if (s == "beta") return ThresholdKind::Beta;
  throw ParseError("threshold kind must be alpha or beta: '" + std::string(s) + "'");
}

ThresholdVector::ThresholdVector(ThresholdKind kind, std::size_t nodes, std::size_t capacity_n)
    : kind_(kind), nodes_(nodes), stride_(capacity_n / 64 + 1) {
  if (stride_ > kernels::kMaxLimbs) throw UsageError("iteration count too large");
  rows_.assign(nodes_ * stride_, 0);
  keys_.assign(nodes_, 0);
}

std::size_t ThresholdVector::low_limb(std::size_t n) const { return (capacity() - n) / 64; }

void ThresholdVector::set_one(NodeId i) {
  Limb* r = rows_.data() + i * stride_;
  std::fill(r, r + stride_, 0);
  r[stride_ - 1] = Limb{1} << 63;
  keys_[i] = r[stride_ - 1];
}

BigInt ThresholdVector::numerator(NodeId i) const {
  BigInt out;
  mpz_import(out.get_mpz_t(), stride_, -1, sizeof(Limb), 0, 0, rows_.data() + i * stride_);
  out >>= static_cast<mp_bitcnt_t>(capacity() - n_);
  return out;
}

Rational ThresholdVector::value(NodeId i) const {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, n_);
  Rational q(numerator(i), den);
  q.canonicalize();
  return q;
}

void ThresholdVector::set_n(std::size_t n) {
  if (n > capacity()) throw UsageError("n exceeds threshold vector capacity");
  n_ = n;
}

void ThresholdVector::reserve(std::size_t capacity_n) {
  const std::size_t stride = capacity_n / 64 + 1;
  if (stride <= stride_) return;
  if (stride > kernels::kMaxLimbs) throw UsageError("iteration count too large");
  // every value gains (stride - stride_) low zero limbs
  const std::size_t extra = stride - stride_;
  std::vector<Limb> rows(nodes_ * stride, 0);
  for (std::size_t i = 0; i < nodes_; ++i) {
    std::copy_n(rows_.data() + i * stride_, stride_, rows.data() + i * stride + extra);
  }
  rows_ = std::move(rows);
  stride_ = stride;
}

void ThresholdVector::set_numerator(NodeId i, const BigInt& num) {
  BigInt limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 2, n_);
  if (num < 0 || num > limit) throw UsageError("threshold numerator out of [0, 2^n]");
  BigInt scaled = num << static_cast<mp_bitcnt_t>(capacity() - n_);
  Limb* r = rows_.data() + i * stride_;
  std::fill(r, r + stride_, 0);
  std::size_t count = 0;
  mpz_export(r, &count, -1, sizeof(Limb), 0, 0, scaled.get_mpz_t());
  keys_[i] = r[stride_ - 1];
}

bool ThresholdVector::operator==(const ThresholdVector& o) const {
  if (kind_ != o.kind_ || n_ != o.n_ || nodes_ != o.nodes_) return false;
  for (NodeId i = 0; i < nodes_; ++i) {
    if (numerator(i) != o.numerator(i)) return false;
  }
  return true;
}

ThresholdVector init_thresholds(ThresholdKind kind, const GameGraph& g, std::size_t capacity_n) {
  ThresholdVector v(kind, g.size(), capacity_n);
  for (NodeId i = 0; i < g.size(); ++i) {
    const Status s = g.outcome(i);
    const bool one = s == Status::WhiteWon || (kind == ThresholdKind::Beta && s == Status::Ongoing);
    if (one) v.set_one(i);
  }
  return v;
}

void step_into(const ThresholdVector& in, ThresholdVector& out, const GameGraph& g, unsigned threads) {
  if (in.size() != g.size()) throw UsageError("threshold vector does not match the graph");
  if (in.n() + 1 > in.capacity()) throw UsageError("threshold vector capacity exhausted");
  if (&out == &in) throw UsageError("step_into needs distinct input and output vectors");
  if (out.nodes_ != in.nodes_ || out.stride_ != in.stride_ || out.n_ > in.n_ + 1) {
    out = in;
  }
  out.kind_ = in.kind_;
  out.n_ = in.n_ + 1;
  const std::size_t L = in.stride_;
  for (NodeId i = 0; i < g.size(); ++i) {
    if (g.ongoing(i)) continue;
    std::copy_n(in.rows_.data() + i * L, L, out.rows_.data() + i * L);
    out.keys_[i] = in.keys_[i];
  }

  kernels::SweepArgs args;
  args.rows_in = in.rows_.data();
  args.keys_in = in.keys_.data();
  args.rows_out = out.rows_.data();
  args.keys_out = out.keys_.data();
  args.stride = L;
  args.lo = out.low_limb(out.n_);
  args.outcome = g.outcomes().data();
  args.white_offsets = g.white_offsets().data();
  args.white_targets = g.white_targets().data();
  args.black_offsets = g.black_offsets().data();
  args.black_targets = g.black_targets().data();

  const auto& k = kernels::active_kernels();
  threads = std::max(1u, threads);
  if (threads == 1 || g.size() < 4096) {
    args.begin = 0;
    args.end = g.size();
    k.sweep(args);
    return;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (g.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    kernels::SweepArgs part = args;
    part.begin = std::min(g.size(), t * chunk);
    part.end = std::min(g.size(), part.begin + chunk);
    if (part.begin < part.end) pool.emplace_back([&k, part] { k.sweep(part); });
  }
}

ThresholdVector step(const ThresholdVector& in, const GameGraph& g) {
  ThresholdVector out;
  step_into(in, out, g);
  return out;
}

bool monotone_step(const ThresholdVector& prev, const ThresholdVector& next) {
  if (prev.size() != next.size() || prev.stride() != next.stride() || prev.kind() != next.kind()) return false;
  const auto& k = kernels::active_kernels();
  for (NodeId i = 0; i < prev.size(); ++i) {
    const int c = k.compare(next.row(i).data(), prev.row(i).data(), 0, prev.stride());
    if (prev.kind() == ThresholdKind::Alpha ? c < 0 : c > 0) return false;
  }
  return true;
}

void run_to(ThresholdVector& v, const GameGraph& g, const RunOptions& opts) {
  if (opts.n_target < v.n()) throw UsageError("target n is below the current iteration");
  v.reserve(opts.n_target);
  ThresholdVector other;
  while (v.n() < opts.n_target) {
    step_into(v, other, g, opts.threads);
    if (opts.check_monotone && !monotone_step(v, other)) {
      throw UsageError("monotone sandwich violated at n = " + std::to_string(other.n()));
    }
    std::swap(v, other);
    if (opts.on_checkpoint && opts.checkpoint_every && v.n() % opts.checkpoint_every == 0 && v.n() != opts.n_target) {
      opts.on_checkpoint(v);
    }
  }
  if (opts.on_checkpoint) opts.on_checkpoint(v);
}

ThresholdVector run(const GameGraph& g, ThresholdKind kind, const RunOptions& opts) {
  ThresholdVector v = init_thresholds(kind, g, opts.n_target);
  run_to(v, g, opts);
  return v;
}

Rational gap(const ThresholdVector& alpha, const ThresholdVector& beta) {
  if (alpha.n() != beta.n() || alpha.size() != beta.size() || alpha.stride() != beta.stride()) {
    throw UsageError("gap needs vectors of the same n and shape");
  }
  if (alpha.kind() != ThresholdKind::Alpha || beta.kind() != ThresholdKind::Beta) {
    throw UsageError("gap needs an alpha and a beta vector");
  }
  const std::size_t L = alpha.stride();
  const auto& k = kernels::active_kernels();
  std::vector<Limb> best(L, 0), diff(L);
  for (NodeId i = 0; i < alpha.size(); ++i) {
    const auto a = alpha.row(i);
    const auto b = beta.row(i);
    unsigned borrow = 0;
    for (std::size_t j = 0; j < L; ++j) {
      const Limb bj = b[j];
      const Limb t = bj - a[j] - borrow;
      borrow = (a[j] > bj || (a[j] == bj && borrow)) ? 1 : 0;
      diff[j] = t;
    }
    if (borrow) throw UsageError("alpha exceeds beta at node " + std::to_string(i));
    if (k.compare(diff.data(), best.data(), 0, L) > 0) best.swap(diff);
  }
  BigInt num, den;
  mpz_import(num.get_mpz_t(), L, -1, sizeof(Limb), 0, 0, best.data());
  mpz_ui_pow_ui(den.get_mpz_t(), 2, alpha.capacity());
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace bidchess
