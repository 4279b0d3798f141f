#pragma once

// Dense complex matrix in planar row-major layout, the storage the SIMD
// kernels operate on.

#include <complex>
#include <cstddef>
#include <vector>

#include "ptlab/simd/kernels.hpp"

namespace ptlab {

class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), re_(rows * cols, 0.0), im_(rows * cols, 0.0) {}

  static CMatrix zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }
  static CMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::complex<double> at(std::size_t i, std::size_t j) const {
    return {re_[i * cols_ + j], im_[i * cols_ + j]};
  }
  void set(std::size_t i, std::size_t j, std::complex<double> z) {
    re_[i * cols_ + j] = z.real();
    im_[i * cols_ + j] = z.imag();
  }

  double* re() noexcept { return re_.data(); }
  double* im() noexcept { return im_.data(); }
  const double* re() const noexcept { return re_.data(); }
  const double* im() const noexcept { return im_.data(); }
  double* re_row(std::size_t i) noexcept { return re_.data() + i * cols_; }
  double* im_row(std::size_t i) noexcept { return im_.data() + i * cols_; }
  const double* re_row(std::size_t i) const noexcept { return re_.data() + i * cols_; }
  const double* im_row(std::size_t i) const noexcept { return im_.data() + i * cols_; }

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> re_;
  std::vector<double> im_;
};

CMatrix multiply(const CMatrix& a, const CMatrix& b,
                 const simd::KernelSet& kernels = simd::active_kernels());
CMatrix adjoint(const CMatrix& a);
CMatrix transpose(const CMatrix& a);
std::complex<double> trace(const CMatrix& a);
// Tr(A B) without forming the product.
std::complex<double> trace_product(const CMatrix& a, const CMatrix& b,
                                   const simd::KernelSet& kernels = simd::active_kernels());
// max_{ij} |(U U*)_{ij} - delta_ij|
double unitarity_residual(const CMatrix& u, const simd::KernelSet& kernels = simd::active_kernels());
double max_abs_diff(const CMatrix& a, const CMatrix& b);

}  // namespace ptlab
