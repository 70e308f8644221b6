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

// Fixed-point limb kernels for the threshold iteration.
//
// A value v in [0, 1] is stored as a row of `stride` little-endian 64-bit
// limbs holding v * 2^(64*stride - 1): the top bit of the last limb is the
// integer bit. Rows only ever carry nonzero limbs in a suffix [lo, stride).
//
// Every kernel has a scalar reference version and, where the CPU supports it,
// an AVX2 version. The two must agree bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "bidchess/board.hpp"

namespace bidchess::kernels {

using Limb = std::uint64_t;

/// Upper bound on `stride` supported by the kernels (n <= 32767).
inline constexpr std::size_t kMaxLimbs = 512;

/// Inputs of one Bellman sweep over nodes [begin, end).
struct SweepArgs {
  const Limb* rows_in = nullptr;
  const Limb* keys_in = nullptr;  ///< top limb of each input row
  Limb* rows_out = nullptr;
  Limb* keys_out = nullptr;
  std::size_t stride = 0;
  std::size_t lo = 0;  ///< lowest limb that may be nonzero in the output
  const Status* outcome = nullptr;
  const std::uint32_t* white_offsets = nullptr;
  const std::uint32_t* white_targets = nullptr;
  const std::uint32_t* black_offsets = nullptr;
  const std::uint32_t* black_targets = nullptr;
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct KernelSet {
  std::string_view name;
  /// Sign of a - b over limbs [lo, hi).
  int (*compare)(const Limb* a, const Limb* b, std::size_t lo, std::size_t hi);
  /// out[lo, hi) = (a + b) >> 1 over the full row of `hi` limbs; limbs of a
  /// and b below lo must be zero.
  void (*average)(Limb* out, const Limb* a, const Limb* b, std::size_t lo, std::size_t hi);
  /// Index (into `candidates`) of a row with the largest (want_max) or
  /// smallest value; the top-limb keys are consulted first.
  std::size_t (*select)(const Limb* rows, const Limb* keys, std::size_t stride, std::size_t lo,
                        std::span<const std::uint32_t> candidates, bool want_max);
  /// For each ongoing node: out = (max over White options + min over Black
  /// options) / 2. Terminal rows are left untouched.
  void (*sweep)(const SweepArgs& args);
};

const KernelSet& scalar_kernels();
/// nullptr when not compiled in or the CPU lacks AVX2.
const KernelSet* avx2_kernels();

/// The kernel set used by the iteration. Chosen once from the CPU, overridable
/// with BIDCHESS_KERNELS=scalar|avx2 or `select_kernels`.
const KernelSet& active_kernels();
/// Throws UsageError for unknown or unsupported names.
void select_kernels(std::string_view name);

/// Names usable with `select_kernels` on this machine.
std::vector<std::string_view> available_kernels();

}  // namespace bidchess::kernels
