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

// AVX2 kernels. This translation unit is compiled with -mavx2 and is only
// entered after a runtime CPU check.

#include <immintrin.h>

#include <array>
#include <bit>

#include "bidchess/kernels.hpp"
#include "sweep_impl.hpp"

namespace bidchess::kernels {

namespace {

inline __m256i sign_bits() { return _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ULL)); }

inline unsigned lane_mask(__m256i v) { return static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(v))); }

struct Avx2Ops {
  static int compare(const Limb* a, const Limb* b, std::size_t lo, std::size_t hi) {
    std::size_t j = hi;
    while (j >= lo + 4) {
      j -= 4;
      const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + j));
      const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j));
      const unsigned ne = ~lane_mask(_mm256_cmpeq_epi64(va, vb)) & 0xFu;
      if (ne) {
        const std::size_t k = j + static_cast<std::size_t>(31 - std::countl_zero(ne));
        return a[k] < b[k] ? -1 : 1;
      }
    }
    while (j-- > lo) {
      if (a[j] != b[j]) return a[j] < b[j] ? -1 : 1;
    }
    return 0;
  }

  static void average(Limb* out, const Limb* a, const Limb* b, std::size_t lo, std::size_t hi) {
    alignas(32) std::array<Limb, kMaxLimbs + 8> sum;
    const __m256i sign = sign_bits();
    const __m256i ones = _mm256_set1_epi64x(-1);
    const __m256i lane_bits = _mm256_setr_epi64x(1, 2, 4, 8);
    unsigned carry = 0;
    std::size_t j = lo;
    // Lane-parallel add; carries are resolved with generate/propagate masks.
    for (; j + 4 <= hi; j += 4) {
      const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + j));
      const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j));
      __m256i s = _mm256_add_epi64(va, vb);
      const unsigned g = lane_mask(_mm256_cmpgt_epi64(_mm256_xor_si256(va, sign), _mm256_xor_si256(s, sign)));
      const unsigned p = lane_mask(_mm256_cmpeq_epi64(s, ones));
      const unsigned t = ((g << 1) | carry) + p;
      const unsigned c = (t ^ p) & 0xFu;
      carry = (t >> 4) & 1u;
      const __m256i cm = _mm256_set1_epi64x(c);
      const __m256i inc = _mm256_cmpeq_epi64(_mm256_and_si256(cm, lane_bits), lane_bits);
      s = _mm256_sub_epi64(s, inc);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(sum.data() + j), s);
    }
    for (; j < hi; ++j) {
      const unsigned __int128 s = static_cast<unsigned __int128>(a[j]) + b[j] + carry;
      sum[j] = static_cast<Limb>(s);
      carry = static_cast<unsigned>(s >> 64);
    }
    sum[hi] = carry;
    j = lo;
    for (; j + 4 <= hi; j += 4) {
      const __m256i v0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sum.data() + j));
      const __m256i v1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sum.data() + j + 1));
      const __m256i r = _mm256_or_si256(_mm256_srli_epi64(v0, 1), _mm256_slli_epi64(v1, 63));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + j), r);
    }
    for (; j < hi; ++j) out[j] = (sum[j] >> 1) | (sum[j + 1] << 63);
  }

  static std::size_t select(const Limb* rows, const Limb* keys, std::size_t stride, std::size_t lo,
                            std::span<const std::uint32_t> cand, bool want_max) {
    const std::size_t n = cand.size();
    const long long* base = reinterpret_cast<const long long*>(keys);
    const __m256i sign = sign_bits();
    Limb best_key;
    std::size_t j = 0;
    if (n >= 4) {
      auto gather = [&](std::size_t at) {
        const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(cand.data() + at));
        return _mm256_xor_si256(_mm256_i32gather_epi64(base, idx, 8), sign);
      };
      __m256i best = gather(0);
      for (j = 4; j + 4 <= n; j += 4) {
        const __m256i v = gather(j);
        const __m256i gt = _mm256_cmpgt_epi64(v, best);
        best = want_max ? _mm256_blendv_epi8(best, v, gt) : _mm256_blendv_epi8(v, best, gt);
      }
      alignas(32) std::array<Limb, 4> lanes;
      _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), _mm256_xor_si256(best, sign));
      best_key = lanes[0];
      for (int k = 1; k < 4; ++k) best_key = want_max ? std::max(best_key, lanes[k]) : std::min(best_key, lanes[k]);
    } else {
      best_key = keys[cand[0]];
      j = 1;
    }
    for (; j < n; ++j) {
      const Limb k = keys[cand[j]];
      best_key = want_max ? std::max(best_key, k) : std::min(best_key, k);
    }
    // Break key ties on the remaining limbs.
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (keys[cand[i]] != best_key) continue;
      if (best == n) {
        best = i;
        continue;
      }
      const int c = compare(rows + cand[i] * stride, rows + cand[best] * stride, lo, stride - 1);
      if (want_max ? c > 0 : c < 0) best = i;
    }
    return best;
  }
};

void avx2_sweep(const SweepArgs& a) { detail::sweep<Avx2Ops>(a); }

}  // namespace

namespace detail {

const KernelSet& avx2_kernel_set() {
  static const KernelSet set{"avx2", &Avx2Ops::compare, &Avx2Ops::average, &Avx2Ops::select, &avx2_sweep};
  return set;
}

}  // namespace detail

}  // namespace bidchess::kernels
