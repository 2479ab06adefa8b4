#include <cstdlib>
#include <string_view>

#include "spacegraph/simd/kernels.hpp"

namespace spacegraph::simd {

#if defined(SPACEGRAPH_HAVE_AVX2_TU)
const KernelTable& avx2_kernel_table();
#endif

const KernelTable* avx2_kernels() {
#if defined(SPACEGRAPH_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const KernelTable& select_kernels() {
  if (const char* forced = std::getenv("SPACEGRAPH_KERNELS");
      forced != nullptr && std::string_view(forced) == "scalar")
    return scalar_kernels();
  if (const KernelTable* avx2 = avx2_kernels()) return *avx2;
  return scalar_kernels();
}

}  // namespace

const KernelTable& kernels() {
  static const KernelTable& chosen = select_kernels();
  return chosen;
}

}  // namespace spacegraph::simd
