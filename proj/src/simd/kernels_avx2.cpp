#include <immintrin.h>

#include "ptlab/simd/kernels.hpp"

namespace ptlab::simd::avx2 {

namespace {

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void axpy(std::size_t n, std::complex<double> alpha, const double* xr, const double* xi,
          double* yr, double* yi) {
  const double ar = alpha.real(), ai = alpha.imag();
  const __m256d var = _mm256_set1_pd(ar), vai = _mm256_set1_pd(ai);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d x_r = _mm256_loadu_pd(xr + k), x_i = _mm256_loadu_pd(xi + k);
    __m256d y_r = _mm256_loadu_pd(yr + k), y_i = _mm256_loadu_pd(yi + k);
    y_r = _mm256_fmadd_pd(var, x_r, y_r);
    y_r = _mm256_fnmadd_pd(vai, x_i, y_r);
    y_i = _mm256_fmadd_pd(var, x_i, y_i);
    y_i = _mm256_fmadd_pd(vai, x_r, y_i);
    _mm256_storeu_pd(yr + k, y_r);
    _mm256_storeu_pd(yi + k, y_i);
  }
  for (; k < n; ++k) {
    yr[k] += ar * xr[k] - ai * xi[k];
    yi[k] += ar * xi[k] + ai * xr[k];
  }
}

template <bool Conj>
std::complex<double> dot(std::size_t n, const double* xr, const double* xi, const double* yr,
                         const double* yi) {
  __m256d re = _mm256_setzero_pd(), im = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d x_r = _mm256_loadu_pd(xr + k), x_i = _mm256_loadu_pd(xi + k);
    const __m256d y_r = _mm256_loadu_pd(yr + k), y_i = _mm256_loadu_pd(yi + k);
    re = _mm256_fmadd_pd(x_r, y_r, re);
    if constexpr (Conj) {
      re = _mm256_fmadd_pd(x_i, y_i, re);
      im = _mm256_fmadd_pd(x_r, y_i, im);
      im = _mm256_fnmadd_pd(x_i, y_r, im);
    } else {
      re = _mm256_fnmadd_pd(x_i, y_i, re);
      im = _mm256_fmadd_pd(x_r, y_i, im);
      im = _mm256_fmadd_pd(x_i, y_r, im);
    }
  }
  double sr = hsum(re), si = hsum(im);
  for (; k < n; ++k) {
    if constexpr (Conj) {
      sr += xr[k] * yr[k] + xi[k] * yi[k];
      si += xr[k] * yi[k] - xi[k] * yr[k];
    } else {
      sr += xr[k] * yr[k] - xi[k] * yi[k];
      si += xr[k] * yi[k] + xi[k] * yr[k];
    }
  }
  return {sr, si};
}

std::complex<double> dotc(std::size_t n, const double* xr, const double* xi, const double* yr,
                          const double* yi) {
  return dot<true>(n, xr, xi, yr, yi);
}

std::complex<double> dotu(std::size_t n, const double* xr, const double* xi, const double* yr,
                          const double* yi) {
  return dot<false>(n, xr, xi, yr, yi);
}

// Row i of C in panels of 8 columns: 4 accumulators per panel (re/im x 2 halves)
// stay in registers across the whole k loop.
void gemm(std::size_t m, std::size_t k, std::size_t n, const double* ar, const double* ai,
          std::size_t lda, const double* br, const double* bi, std::size_t ldb, double* cr,
          double* ci, std::size_t ldc) {
  for (std::size_t i = 0; i < m; ++i) {
    const double* ari = ar + i * lda;
    const double* aii = ai + i * lda;
    double* cri = cr + i * ldc;
    double* cii = ci + i * ldc;
    std::size_t j = 0;
    for (; j + 8 <= n; j += 8) {
      __m256d r0 = _mm256_setzero_pd(), r1 = _mm256_setzero_pd();
      __m256d i0 = _mm256_setzero_pd(), i1 = _mm256_setzero_pd();
      for (std::size_t p = 0; p < k; ++p) {
        const __m256d a_r = _mm256_set1_pd(ari[p]), a_i = _mm256_set1_pd(aii[p]);
        const double* brp = br + p * ldb + j;
        const double* bip = bi + p * ldb + j;
        const __m256d b_r0 = _mm256_loadu_pd(brp), b_r1 = _mm256_loadu_pd(brp + 4);
        const __m256d b_i0 = _mm256_loadu_pd(bip), b_i1 = _mm256_loadu_pd(bip + 4);
        r0 = _mm256_fmadd_pd(a_r, b_r0, r0);
        r0 = _mm256_fnmadd_pd(a_i, b_i0, r0);
        r1 = _mm256_fmadd_pd(a_r, b_r1, r1);
        r1 = _mm256_fnmadd_pd(a_i, b_i1, r1);
        i0 = _mm256_fmadd_pd(a_r, b_i0, i0);
        i0 = _mm256_fmadd_pd(a_i, b_r0, i0);
        i1 = _mm256_fmadd_pd(a_r, b_i1, i1);
        i1 = _mm256_fmadd_pd(a_i, b_r1, i1);
      }
      _mm256_storeu_pd(cri + j, r0);
      _mm256_storeu_pd(cri + j + 4, r1);
      _mm256_storeu_pd(cii + j, i0);
      _mm256_storeu_pd(cii + j + 4, i1);
    }
    for (; j < n; ++j) {
      double sr = 0, si = 0;
      for (std::size_t p = 0; p < k; ++p) {
        const double xr = ari[p], xi = aii[p];
        const double yr = br[p * ldb + j], yi = bi[p * ldb + j];
        sr += xr * yr - xi * yi;
        si += xr * yi + xi * yr;
      }
      cri[j] = sr;
      cii[j] = si;
    }
  }
}

}  // namespace

const KernelSet& kernels() {
  static const KernelSet set{"avx2", axpy, dotc, dotu, gemm};
  return set;
}

}  // namespace ptlab::simd::avx2
