#pragma once

#include "trusskit/kernels.hpp"

namespace trusskit::kernels {

#if defined(TRUSSKIT_HAVE_AVX2)
// Defined in the translation unit built with -mavx2; call only after a CPU check.
const KernelSet& avx2_set();
#endif

}  // namespace trusskit::kernels
