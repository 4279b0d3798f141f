#pragma once

// Complex inner loops over planar storage (separate re / im arrays). One
// scalar reference set, one AVX2+FMA set; the active set is chosen once at
// runtime and can be forced with PTLAB_KERNELS=scalar|avx2.

#include <complex>
#include <cstddef>

namespace ptlab::simd {

struct KernelSet {
  const char* name;
  // y += alpha * x
  void (*axpy)(std::size_t n, std::complex<double> alpha, const double* xr, const double* xi,
               double* yr, double* yi);
  // sum conj(x_k) y_k
  std::complex<double> (*dotc)(std::size_t n, const double* xr, const double* xi, const double* yr,
                               const double* yi);
  // sum x_k y_k
  std::complex<double> (*dotu)(std::size_t n, const double* xr, const double* xi, const double* yr,
                               const double* yi);
  // C = A B, A is m x k, B is k x n, all row-major with leading dimensions.
  void (*gemm)(std::size_t m, std::size_t k, std::size_t n, const double* ar, const double* ai,
               std::size_t lda, const double* br, const double* bi, std::size_t ldb, double* cr,
               double* ci, std::size_t ldc);
};

enum class KernelChoice { Auto, Scalar, Avx2 };

const KernelSet& scalar_kernels();
// nullptr when not compiled in or the CPU lacks AVX2/FMA.
const KernelSet* avx2_kernels();

// Throws ContractError when Avx2 is requested but unavailable.
const KernelSet& select_kernels(KernelChoice choice);
// Auto unless PTLAB_KERNELS says otherwise; resolved once.
const KernelSet& active_kernels();

}  // namespace ptlab::simd
