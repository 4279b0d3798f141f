#pragma once

// Haar unitary sampling and Monte Carlo estimation of normalised word traces.
//
// Every sample index owns its own generator, seeded from (seed, index, label),
// and per-sample values are reduced in index order, so an estimate depends only
// on its inputs and not on the number of worker threads.

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ptlab/cmatrix.hpp"
#include "ptlab/moments.hpp"
#include "ptlab/perms.hpp"

namespace ptlab::sampler {

using Rng = std::mt19937_64;

inline constexpr std::size_t kMaxDimension = 4096;
inline constexpr std::uint64_t kMaxSamples = 10'000'000;
inline constexpr double kUnitarityTolerance = 1e-10;

Rng sample_stream(std::uint64_t seed, std::uint64_t index, std::uint64_t substream = 0);

// Ginibre matrix, rows orthonormalised twice (Gram-Schmidt), i.e. the Q of
// G = L Q with L lower triangular with positive diagonal.
CMatrix sample_haar(std::size_t n, Rng& rng,
                    const simd::KernelSet& kernels = simd::active_kernels());

// [U^sigma]_{ij} = U_{sigma(i,j)}
CMatrix apply_entry_permutation(const CMatrix& u, const perms::EntryPermutation& perm);

using BlockGrid = std::vector<std::vector<CMatrix>>;
BlockGrid extract_blocks(const CMatrix& u, const perms::BlockShape& shape);
CMatrix assemble_blocks(const BlockGrid& grid);
// v_k: block (i, i+k mod b) holds U_{i+k, i}; zero elsewhere. k is taken mod b.
CMatrix diagonal_decomposition(const CMatrix& u, const perms::BlockShape& shape, std::size_t k);
// s_{ij} = 1 iff j = i + 1 (mod b)
CMatrix shift_matrix(std::size_t b);

struct EstimatorResult {
  std::complex<double> mean;
  double std_error = 0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  std::string description;

  friend bool operator==(const EstimatorResult&, const EstimatorResult&) = default;
};

struct EstimateOptions {
  std::size_t threads = 0;  // 0: hardware concurrency
  const simd::KernelSet* kernels = nullptr;  // nullptr: active_kernels()
};

// Called once per sample with one Haar unitary per label; returns a fixed
// number of complex observables.
using SampleFunctional = std::function<std::vector<std::complex<double>>(
    const std::vector<CMatrix>& unitaries, const simd::KernelSet& kernels)>;

std::vector<EstimatorResult> estimate(std::size_t n_labels, std::size_t n, std::uint64_t n_samples,
                                      std::uint64_t seed, std::size_t n_outputs,
                                      const SampleFunctional& functional,
                                      const EstimateOptions& options = {});

// (1/N) Tr of the word evaluated on sampled matrices.
std::complex<double> word_trace(const moments::Word& word, const std::vector<std::string>& labels,
                                const std::vector<CMatrix>& unitaries,
                                const simd::KernelSet& kernels = simd::active_kernels());

EstimatorResult estimate_word_trace(const moments::Word& word, std::uint64_t n_samples,
                                    std::uint64_t seed, const EstimateOptions& options = {});

}  // namespace ptlab::sampler
