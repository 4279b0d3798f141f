#include "ptlab/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "ptlab/errors.hpp"
#include "ptlab/summation.hpp"

namespace ptlab::sampler {

Rng sample_stream(std::uint64_t seed, std::uint64_t index, std::uint64_t substream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(substream)};
  return Rng(seq);
}

namespace {

// One attempt; false when a row collapses numerically.
bool orthonormalize_rows(CMatrix& g, const simd::KernelSet& k) {
  const std::size_t n = g.rows();
  for (std::size_t i = 0; i < n; ++i) {
    double* ri = g.re_row(i);
    double* ii = g.im_row(i);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t j = 0; j < i; ++j) {
        const std::complex<double> c = k.dotc(n, g.re_row(j), g.im_row(j), ri, ii);
        k.axpy(n, -c, g.re_row(j), g.im_row(j), ri, ii);
      }
    const double norm = std::sqrt(k.dotc(n, ri, ii, ri, ii).real());
    if (!(norm > 1e-8)) return false;
    const double inv = 1.0 / norm;
    for (std::size_t c = 0; c < n; ++c) {
      ri[c] *= inv;
      ii[c] *= inv;
    }
  }
  return true;
}

}  // namespace

CMatrix sample_haar(std::size_t n, Rng& rng, const simd::KernelSet& kernels) {
  if (n == 0) throw DomainError("sample_haar needs N >= 1");
  if (n > kMaxDimension) throw CapacityError("sample_haar: N exceeds " + std::to_string(kMaxDimension));
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  for (int attempt = 0; attempt < 16; ++attempt) {
    CMatrix g(n, n);
    for (std::size_t x = 0; x < n * n; ++x) {
      g.re()[x] = gauss(rng);
      g.im()[x] = gauss(rng);
    }
    if (orthonormalize_rows(g, kernels) && unitarity_residual(g, kernels) < kUnitarityTolerance)
      return g;
  }
  throw SingularityError("sample_haar: repeated numerically singular Gaussian draws");
}

CMatrix apply_entry_permutation(const CMatrix& u, const perms::EntryPermutation& perm) {
  const std::size_t n = u.rows();
  if (u.cols() != n || perm.domain_size() != n)
    throw ContractError("apply_entry_permutation: matrix is " + std::to_string(u.rows()) + "x" +
                        std::to_string(u.cols()) + ", permutation acts on [" +
                        std::to_string(perm.domain_size()) + "]^2");
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t a = i, b = j;
      perm.apply0(a, b);
      out.re()[i * n + j] = u.re()[a * n + b];
      out.im()[i * n + j] = u.im()[a * n + b];
    }
  return out;
}

BlockGrid extract_blocks(const CMatrix& u, const perms::BlockShape& shape) {
  if (u.rows() != shape.m() || u.cols() != shape.m())
    throw ContractError("extract_blocks: matrix size differs from b*d");
  const std::size_t b = shape.b(), d = shape.d();
  BlockGrid grid(b, std::vector<CMatrix>(b, CMatrix(d, d)));
  for (std::size_t i = 0; i < shape.m(); ++i)
    for (std::size_t j = 0; j < shape.m(); ++j) grid[i / d][j / d].set(i % d, j % d, u.at(i, j));
  return grid;
}

CMatrix assemble_blocks(const BlockGrid& grid) {
  const std::size_t b = grid.size();
  if (b == 0 || grid[0].empty()) throw ContractError("assemble_blocks: empty grid");
  const std::size_t d = grid[0][0].rows();
  for (const auto& row : grid) {
    if (row.size() != b) throw ContractError("assemble_blocks: grid is not square");
    for (const auto& m : row)
      if (m.rows() != d || m.cols() != d) throw ContractError("assemble_blocks: unequal blocks");
  }
  CMatrix u(b * d, b * d);
  for (std::size_t i = 0; i < b * d; ++i)
    for (std::size_t j = 0; j < b * d; ++j) u.set(i, j, grid[i / d][j / d].at(i % d, j % d));
  return u;
}

CMatrix diagonal_decomposition(const CMatrix& u, const perms::BlockShape& shape, std::size_t k) {
  if (u.rows() != shape.m() || u.cols() != shape.m())
    throw ContractError("diagonal_decomposition: matrix size differs from b*d");
  const std::size_t b = shape.b(), d = shape.d();
  k %= b;
  CMatrix v(shape.m(), shape.m());
  for (std::size_t i = 0; i < b; ++i) {
    const std::size_t j = (i + k) % b;
    // block (i, j) of the grid transpose is U_{j, i}
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) v.set(i * d + r, j * d + c, u.at(j * d + r, i * d + c));
  }
  return v;
}

CMatrix shift_matrix(std::size_t b) {
  if (b == 0) throw DomainError("shift_matrix needs b >= 1");
  CMatrix s(b, b);
  for (std::size_t i = 0; i < b; ++i) s.set(i, (i + 1) % b, 1.0);
  return s;
}

namespace {

// Samples are grouped in fixed chunks; chunk statistics are merged in index
// order (Chan et al.), which keeps the result independent of scheduling.
constexpr std::uint64_t kChunk = 256;

struct Moments {
  double count = 0;
  std::complex<double> mean{0, 0};
  double m2 = 0;  // sum |x - mean|^2

  void merge(const Moments& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double total = count + o.count;
    const std::complex<double> delta = o.mean - mean;
    mean += delta * (o.count / total);
    m2 += o.m2 + std::norm(delta) * count * o.count / total;
    count = total;
  }
};

Moments chunk_moments(const std::vector<std::complex<double>>& xs) {
  Moments m;
  m.count = static_cast<double>(xs.size());
  CompensatedComplexSum s;
  for (auto x : xs) s.add(x);
  m.mean = s.value() / m.count;
  CompensatedSum d;
  for (auto x : xs) d.add(std::norm(x - m.mean));
  m.m2 = d.value();
  return m;
}

}  // namespace

std::vector<EstimatorResult> estimate(std::size_t n_labels, std::size_t n, std::uint64_t n_samples,
                                      std::uint64_t seed, std::size_t n_outputs,
                                      const SampleFunctional& functional,
                                      const EstimateOptions& options) {
  if (n == 0) throw DomainError("estimate: N must be positive");
  if (n > kMaxDimension)
    throw CapacityError("estimate: N = " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxDimension));
  if (n_samples == 0) throw DomainError("estimate: need at least one sample");
  if (n_samples > kMaxSamples)
    throw CapacityError("estimate: " + std::to_string(n_samples) + " samples exceeds " +
                        std::to_string(kMaxSamples));
  if (n_outputs == 0) throw ContractError("estimate: functional must produce an output");

  const simd::KernelSet& kernels = options.kernels ? *options.kernels : simd::active_kernels();
  const std::uint64_t n_chunks = (n_samples + kChunk - 1) / kChunk;
  std::vector<std::vector<Moments>> chunk_stats(n_chunks, std::vector<Moments>(n_outputs));

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      std::vector<std::vector<std::complex<double>>> values(n_outputs);
      std::vector<CMatrix> unitaries(n_labels);
      for (std::uint64_t c = next++; c < n_chunks; c = next++) {
        const std::uint64_t begin = c * kChunk, end = std::min(n_samples, begin + kChunk);
        for (auto& v : values) v.clear();
        for (std::uint64_t s = begin; s < end; ++s) {
          for (std::size_t l = 0; l < n_labels; ++l) {
            Rng rng = sample_stream(seed, s, l);
            unitaries[l] = sample_haar(n, rng, kernels);
          }
          const auto out = functional(unitaries, kernels);
          if (out.size() != n_outputs) throw ContractError("estimate: functional output size changed");
          for (std::size_t o = 0; o < n_outputs; ++o) values[o].push_back(out[o]);
        }
        for (std::size_t o = 0; o < n_outputs; ++o) chunk_stats[c][o] = chunk_moments(values[o]);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = n_chunks;
    }
  };

  std::size_t threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max<std::size_t>(1, std::min<std::uint64_t>(threads, n_chunks));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<EstimatorResult> results(n_outputs);
  for (std::size_t o = 0; o < n_outputs; ++o) {
    Moments total;
    for (const auto& c : chunk_stats) total.merge(c[o]);
    auto& r = results[o];
    r.mean = total.mean;
    r.std_error = n_samples > 1 ? std::sqrt(total.m2 / (total.count - 1) / total.count) : 0.0;
    r.n_samples = n_samples;
    r.seed = seed;
  }
  return results;
}

std::complex<double> word_trace(const moments::Word& word, const std::vector<std::string>& labels,
                                const std::vector<CMatrix>& unitaries,
                                const simd::KernelSet& kernels) {
  std::vector<CMatrix> factors;
  for (const auto& letter : word.letters()) {
    const auto it = std::find(labels.begin(), labels.end(), letter.label);
    if (it == labels.end()) throw ContractError("word_trace: no matrix for label " + letter.label);
    CMatrix m = apply_entry_permutation(unitaries[static_cast<std::size_t>(it - labels.begin())],
                                        letter.perm);
    if (letter.exponent == ncpart::Sign::Star) m = adjoint(m);
    factors.push_back(std::move(m));
  }
  const double n = static_cast<double>(word.dimension());
  if (factors.size() == 1) return trace(factors[0]) / n;
  CMatrix left = std::move(factors[0]);
  for (std::size_t s = 1; s + 1 < factors.size(); ++s) left = multiply(left, factors[s], kernels);
  return trace_product(left, factors.back(), kernels) / n;
}

EstimatorResult estimate_word_trace(const moments::Word& word, std::uint64_t n_samples,
                                    std::uint64_t seed, const EstimateOptions& options) {
  const auto labels = word.labels();
  auto results = estimate(
      labels.size(), word.dimension(), n_samples, seed, 1,
      [&](const std::vector<CMatrix>& us, const simd::KernelSet& k) {
        return std::vector<std::complex<double>>{word_trace(word, labels, us, k)};
      },
      options);
  results[0].description = word.describe();
  return results[0];
}

}  // namespace ptlab::sampler
