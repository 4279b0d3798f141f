#include <cstdlib>
#include <string>

#include "ptlab/errors.hpp"
#include "ptlab/simd/kernels.hpp"

namespace ptlab::simd {

#if defined(PTLAB_BUILD_AVX2)
namespace avx2 {
const KernelSet& kernels();
}
#endif

const KernelSet* avx2_kernels() {
#if defined(PTLAB_BUILD_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &avx2::kernels() : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& select_kernels(KernelChoice choice) {
  switch (choice) {
    case KernelChoice::Scalar:
      return scalar_kernels();
    case KernelChoice::Avx2:
      if (const KernelSet* k = avx2_kernels()) return *k;
      throw ContractError("AVX2 kernels requested but not available on this build/CPU");
    case KernelChoice::Auto:
      break;
  }
  if (const KernelSet* k = avx2_kernels()) return *k;
  return scalar_kernels();
}

const KernelSet& active_kernels() {
  static const KernelSet& set = [] () -> const KernelSet& {
    const char* env = std::getenv("PTLAB_KERNELS");
    const std::string choice = env ? env : "";
    if (choice == "scalar") return select_kernels(KernelChoice::Scalar);
    if (choice == "avx2") return select_kernels(KernelChoice::Avx2);
    return select_kernels(KernelChoice::Auto);
  }();
  return set;
}

}  // namespace ptlab::simd
