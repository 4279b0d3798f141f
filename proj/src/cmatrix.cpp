#include "ptlab/cmatrix.hpp"

#include <algorithm>
#include <cmath>

#include "ptlab/errors.hpp"
#include "ptlab/summation.hpp"

namespace ptlab {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.re_[i * n + i] = 1.0;
  return m;
}

CMatrix multiply(const CMatrix& a, const CMatrix& b, const simd::KernelSet& kernels) {
  if (a.cols() != b.rows()) throw ContractError("multiply: inner dimensions differ");
  CMatrix c(a.rows(), b.cols());
  kernels.gemm(a.rows(), a.cols(), b.cols(), a.re(), a.im(), a.cols(), b.re(), b.im(), b.cols(),
               c.re(), c.im(), c.cols());
  return c;
}

CMatrix adjoint(const CMatrix& a) {
  CMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.set(j, i, std::conj(a.at(i, j)));
  return t;
}

CMatrix transpose(const CMatrix& a) {
  CMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.set(j, i, a.at(i, j));
  return t;
}

std::complex<double> trace(const CMatrix& a) {
  if (a.rows() != a.cols()) throw ContractError("trace of a non-square matrix");
  CompensatedComplexSum s;
  for (std::size_t i = 0; i < a.rows(); ++i) s.add(a.at(i, i));
  return s.value();
}

std::complex<double> trace_product(const CMatrix& a, const CMatrix& b,
                                   const simd::KernelSet& kernels) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw ContractError("trace_product: shapes do not give a square product");
  const CMatrix bt = transpose(b);
  CompensatedComplexSum s;
  for (std::size_t i = 0; i < a.rows(); ++i)
    s.add(kernels.dotu(a.cols(), a.re_row(i), a.im_row(i), bt.re_row(i), bt.im_row(i)));
  return s.value();
}

double unitarity_residual(const CMatrix& u, const simd::KernelSet& kernels) {
  if (u.rows() != u.cols()) throw ContractError("unitarity of a non-square matrix");
  const std::size_t n = u.rows();
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::complex<double> g = kernels.dotc(n, u.re_row(j), u.im_row(j), u.re_row(i), u.im_row(i));
      if (i == j) g -= 1.0;
      worst = std::max(worst, std::abs(g));
    }
  return worst;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ContractError("max_abs_diff: shape mismatch");
  double worst = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
  return worst;
}

}  // namespace ptlab
