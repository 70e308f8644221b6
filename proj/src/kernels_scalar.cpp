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

#include "bidchess/kernels.hpp"
#include "sweep_impl.hpp"

namespace bidchess::kernels {

namespace {

struct ScalarOps {
  static int compare(const Limb* a, const Limb* b, std::size_t lo, std::size_t hi) {
    for (std::size_t j = hi; j-- > lo;) {
      if (a[j] != b[j]) return a[j] < b[j] ? -1 : 1;
    }
    return 0;
  }

  static void average(Limb* out, const Limb* a, const Limb* b, std::size_t lo, std::size_t hi) {
    unsigned __int128 carry = 0;
    Limb prev = 0;
    for (std::size_t j = lo; j < hi; ++j) {
      const unsigned __int128 s = static_cast<unsigned __int128>(a[j]) + b[j] + carry;
      const Limb cur = static_cast<Limb>(s);
      carry = s >> 64;
      if (j > lo) out[j - 1] = (prev >> 1) | (cur << 63);
      prev = cur;
    }
    out[hi - 1] = (prev >> 1) | (static_cast<Limb>(carry) << 63);
  }

  static std::size_t select(const Limb* rows, const Limb* keys, std::size_t stride, std::size_t lo,
                            std::span<const std::uint32_t> cand, bool want_max) {
    std::size_t best = 0;
    Limb best_key = keys[cand[0]];
    for (std::size_t j = 1; j < cand.size(); ++j) {
      const Limb k = keys[cand[j]];
      bool better;
      if (k != best_key) {
        better = want_max ? k > best_key : k < best_key;
      } else {
        const int c = compare(rows + cand[j] * stride, rows + cand[best] * stride, lo, stride - 1);
        better = want_max ? c > 0 : c < 0;
      }
      if (better) {
        best = j;
        best_key = k;
      }
    }
    return best;
  }
};

void scalar_sweep(const SweepArgs& a) { detail::sweep<ScalarOps>(a); }

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{"scalar", &ScalarOps::compare, &ScalarOps::average, &ScalarOps::select, &scalar_sweep};
  return set;
}

}  // namespace bidchess::kernels
