// SPDX-License-Identifier: Apache-2.0
#include <vector>

#include "edgegap/simd.hpp"

namespace edgegap::simd {

#if defined(EDGEGAP_HAVE_AVX2)
extern const KernelTable kAvx2Kernels;
#endif

namespace {

std::vector<const KernelTable*> detect() {
  std::vector<const KernelTable*> tables{&scalar_kernels()};
#if defined(EDGEGAP_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    tables.push_back(&kAvx2Kernels);
  }
#endif
  return tables;
}

}  // namespace

std::span<const KernelTable* const> available_kernels() {
  static const std::vector<const KernelTable*> tables = detect();
  return tables;
}

const KernelTable& active_kernels() {
  static const KernelTable& chosen = *available_kernels().back();
  return chosen;
}

}  // namespace edgegap::simd
