#include <gtest/gtest.h>

#include <array>
#include <random>
#include <vector>

#include "ptlab/errors.hpp"
#include "ptlab/simd/kernels.hpp"

using namespace ptlab::simd;

namespace {

struct Planar {
  std::vector<double> re, im;
};

Planar random_planar(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Planar p{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    p.re[k] = g(rng);
    p.im[k] = g(rng);
  }
  return p;
}

double max_diff(const Planar& a, const Planar& b) {
  double m = 0;
  for (std::size_t k = 0; k < a.re.size(); ++k) {
    m = std::max(m, std::abs(a.re[k] - b.re[k]));
    m = std::max(m, std::abs(a.im[k] - b.im[k]));
  }
  return m;
}

class Avx2Equivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    fast = avx2_kernels();
    if (!fast) GTEST_SKIP() << "AVX2 kernels unavailable on this machine";
  }
  const KernelSet& ref = scalar_kernels();
  const KernelSet* fast = nullptr;
  std::mt19937_64 rng{2024};
};

}  // namespace

TEST(Kernels, Selection) {
  EXPECT_STREQ(select_kernels(KernelChoice::Scalar).name, "scalar");
  EXPECT_EQ(&select_kernels(KernelChoice::Scalar), &scalar_kernels());
  if (avx2_kernels())
    EXPECT_EQ(&select_kernels(KernelChoice::Avx2), avx2_kernels());
  else
    EXPECT_THROW(select_kernels(KernelChoice::Avx2), ptlab::ContractError);
  EXPECT_NE(active_kernels().name, nullptr);
}

TEST(Kernels, ScalarReference) {
  const double xr[] = {1, 2}, xi[] = {0, 1}, yr[] = {3, 0}, yi[] = {1, 1};
  // conj(1) (3+i) + conj(2+i) (i) = 3 + i + 1 + 2i
  EXPECT_EQ(scalar_kernels().dotc(2, xr, xi, yr, yi), std::complex<double>(4, 3));
  // (3+i) + (2+i) i = 3 + i + 2i - 1
  EXPECT_EQ(scalar_kernels().dotu(2, xr, xi, yr, yi), std::complex<double>(2, 3));
  double zr[] = {1, 1}, zi[] = {0, 0};
  scalar_kernels().axpy(2, {0, 1}, xr, xi, zr, zi);  // z += i x
  EXPECT_EQ(zr[1], 0);
  EXPECT_EQ(zi[1], 2);
}

TEST_F(Avx2Equivalence, VectorKernels) {
  for (std::size_t n = 0; n <= 41; ++n) {
    const auto x = random_planar(n, rng), y = random_planar(n, rng);
    const auto a = ref.dotc(n, x.re.data(), x.im.data(), y.re.data(), y.im.data());
    const auto b = fast->dotc(n, x.re.data(), x.im.data(), y.re.data(), y.im.data());
    EXPECT_NEAR(std::abs(a - b), 0, 1e-12 * (1 + n));
    const auto c = ref.dotu(n, x.re.data(), x.im.data(), y.re.data(), y.im.data());
    const auto d = fast->dotu(n, x.re.data(), x.im.data(), y.re.data(), y.im.data());
    EXPECT_NEAR(std::abs(c - d), 0, 1e-12 * (1 + n));

    Planar y1 = y, y2 = y;
    const std::complex<double> alpha(0.3, -1.7);
    ref.axpy(n, alpha, x.re.data(), x.im.data(), y1.re.data(), y1.im.data());
    fast->axpy(n, alpha, x.re.data(), x.im.data(), y2.re.data(), y2.im.data());
    EXPECT_LE(max_diff(y1, y2), 1e-13);
  }
}

TEST_F(Avx2Equivalence, Gemm) {
  const std::vector<std::array<std::size_t, 3>> shapes{
      {1, 1, 1}, {3, 5, 7}, {8, 8, 8}, {9, 4, 17}, {16, 33, 15}, {31, 12, 40}, {64, 64, 64}};
  for (const auto& [m, k, n] : shapes) {
    const std::size_t lda = k + 3, ldb = n + 1, ldc = n + 2;
    const auto a = random_planar(m * lda, rng), b = random_planar(k * ldb, rng);
    Planar c1{std::vector<double>(m * ldc, 7.0), std::vector<double>(m * ldc, 7.0)}, c2 = c1;
    ref.gemm(m, k, n, a.re.data(), a.im.data(), lda, b.re.data(), b.im.data(), ldb, c1.re.data(),
             c1.im.data(), ldc);
    fast->gemm(m, k, n, a.re.data(), a.im.data(), lda, b.re.data(), b.im.data(), ldb, c2.re.data(),
               c2.im.data(), ldc);
    EXPECT_LE(max_diff(c1, c2), 1e-12 * static_cast<double>(k)) << m << "x" << k << "x" << n;
    // padding between rows is untouched
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = n; j < ldc; ++j) EXPECT_EQ(c2.re[i * ldc + j], 7.0);
  }
}
