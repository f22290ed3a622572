#include <cstdlib>
#include <string_view>

#include "kernels_internal.hpp"

namespace trusskit::kernels {

const KernelSet* avx2() {
#if defined(TRUSSKIT_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_set() : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& active() {
  static const KernelSet& chosen = [] () -> const KernelSet& {
    const char* forced = std::getenv("TRUSSKIT_KERNELS");
    if (forced != nullptr && std::string_view(forced) == "scalar") return scalar();
    if (const auto* fast = avx2()) return *fast;
    return scalar();
  }();
  return chosen;
}

}  // namespace trusskit::kernels
