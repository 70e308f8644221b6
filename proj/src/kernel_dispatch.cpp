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

#include <atomic>
#include <cstdlib>
#include <string>

#include "bidchess/error.hpp"
#include "bidchess/kernels.hpp"

namespace bidchess::kernels {

#ifdef BIDCHESS_HAVE_AVX2
namespace detail {
const KernelSet& avx2_kernel_set();
}
#endif

namespace {

bool cpu_has_avx2() {
#if defined(BIDCHESS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelSet* by_name(std::string_view name) {
  if (name == "scalar") return &scalar_kernels();
  if (name == "avx2") return avx2_kernels();
  return nullptr;
}

const KernelSet* initial() {
  if (const char* env = std::getenv("BIDCHESS_KERNELS")) {
    if (const KernelSet* k = by_name(env)) return k;
  }
  if (const KernelSet* k = avx2_kernels()) return k;
  return &scalar_kernels();
}

std::atomic<const KernelSet*>& current() {
  static std::atomic<const KernelSet*> k{initial()};
  return k;
}

}  // namespace

const KernelSet* avx2_kernels() {
#ifdef BIDCHESS_HAVE_AVX2
  static const bool ok = cpu_has_avx2();
  return ok ? &detail::avx2_kernel_set() : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& active_kernels() { return *current().load(std::memory_order_relaxed); }

void select_kernels(std::string_view name) {
  const KernelSet* k = by_name(name);
  if (!k) throw UsageError("kernel set '" + std::string(name) + "' is not available");
  current().store(k, std::memory_order_relaxed);
}

std::vector<std::string_view> available_kernels() {
  std::vector<std::string_view> out{"scalar"};
  if (avx2_kernels()) out.push_back("avx2");
  return out;
}

}  // namespace bidchess::kernels
