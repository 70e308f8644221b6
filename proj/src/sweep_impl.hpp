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

// Shared sweep loop, instantiated once per kernel set so the primitives
// inline into it.

#include "bidchess/kernels.hpp"

namespace bidchess::kernels::detail {

template <class Ops>
void sweep(const SweepArgs& a) {
  const std::size_t L = a.stride;
  for (std::size_t i = a.begin; i < a.end; ++i) {
    if (a.outcome[i] != Status::Ongoing) continue;
    const std::span<const std::uint32_t> white(a.white_targets + a.white_offsets[i],
                                               a.white_offsets[i + 1] - a.white_offsets[i]);
    const std::span<const std::uint32_t> black(a.black_targets + a.black_offsets[i],
                                               a.black_offsets[i + 1] - a.black_offsets[i]);
    const std::size_t w = white[Ops::select(a.rows_in, a.keys_in, L, a.lo, white, true)];
    const std::size_t b = black[Ops::select(a.rows_in, a.keys_in, L, a.lo, black, false)];
    Limb* out = a.rows_out + i * L;
    Ops::average(out, a.rows_in + w * L, a.rows_in + b * L, a.lo, L);
    a.keys_out[i] = out[L - 1];
  }
}

}  // namespace bidchess::kernels::detail
