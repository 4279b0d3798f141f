#include <vector>

#include "ptlab/simd/kernels.hpp"

namespace ptlab::simd {

namespace {

void axpy(std::size_t n, std::complex<double> alpha, const double* xr, const double* xi,
          double* yr, double* yi) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t k = 0; k < n; ++k) {
    yr[k] += ar * xr[k] - ai * xi[k];
    yi[k] += ar * xi[k] + ai * xr[k];
  }
}

std::complex<double> dotc(std::size_t n, const double* xr, const double* xi, const double* yr,
                          const double* yi) {
  double re = 0, im = 0;
  for (std::size_t k = 0; k < n; ++k) {
    re += xr[k] * yr[k] + xi[k] * yi[k];
    im += xr[k] * yi[k] - xi[k] * yr[k];
  }
  return {re, im};
}

std::complex<double> dotu(std::size_t n, const double* xr, const double* xi, const double* yr,
                          const double* yi) {
  double re = 0, im = 0;
  for (std::size_t k = 0; k < n; ++k) {
    re += xr[k] * yr[k] - xi[k] * yi[k];
    im += xr[k] * yi[k] + xi[k] * yr[k];
  }
  return {re, im};
}

void gemm(std::size_t m, std::size_t k, std::size_t n, const double* ar, const double* ai,
          std::size_t lda, const double* br, const double* bi, std::size_t ldb, double* cr,
          double* ci, std::size_t ldc) {
  for (std::size_t i = 0; i < m; ++i) {
    double* cri = cr + i * ldc;
    double* cii = ci + i * ldc;
    for (std::size_t j = 0; j < n; ++j) cri[j] = cii[j] = 0;
    for (std::size_t p = 0; p < k; ++p)
      axpy(n, {ar[i * lda + p], ai[i * lda + p]}, br + p * ldb, bi + p * ldb, cri, cii);
  }
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{"scalar", axpy, dotc, dotu, gemm};
  return set;
}

}  // namespace ptlab::simd
