#pragma once

// Brute-force reference implementations, deliberately written without the
// library's shortcuts, used to check the production code.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "ptlab/ncpart.hpp"
#include "ptlab/rational.hpp"

namespace oracle {

using ptlab::Rational;

// Partial transpose by explicit block loops: block (p, q), local (r, c).
// theta = +1 transposes inside blocks, theta = -1 moves blocks.
inline std::vector<std::pair<std::size_t, std::size_t>> gamma_table(std::size_t b, std::size_t d,
                                                                    int theta) {
  const std::size_t m = b * d;
  std::vector<std::pair<std::size_t, std::size_t>> t(m * m);
  for (std::size_t p = 0; p < b; ++p)
    for (std::size_t q = 0; q < b; ++q)
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
          const std::size_t i = p * d + r, j = q * d + c;
          t[i * m + j] = theta == 1 ? std::make_pair(p * d + c, q * d + r)
                                    : std::make_pair(q * d + r, p * d + c);
        }
  return t;
}

// Exact solve of a dense rational system by Gaussian elimination with row swaps.
inline std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return {};
    std::swap(a[p], a[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t r = n; r-- > 0;) {
    Rational s = rhs[r];
    for (std::size_t k = r + 1; k < n; ++k) s -= a[r][k] * x[k];
    x[r] = s / a[r][r];
  }
  return x;
}

inline std::size_t cycles(const std::vector<int>& p) {
  std::vector<bool> seen(p.size());
  std::size_t c = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    ++c;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(p[x])) seen[x] = true;
  }
  return c;
}

// Wg_N on all of S_n from the n! x n! Gram system G w = delta_e with
// G[s][t] = N^{#(s^{-1} t)}. Keys are one-line permutations.
inline std::map<std::vector<int>, Rational> weingarten_full(std::size_t n, long big_n) {
  std::vector<std::vector<int>> group;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do group.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t g = group.size();
  auto inv = [](const std::vector<int>& x) {
    std::vector<int> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[x[i]] = static_cast<int>(i);
    return y;
  };
  std::vector<std::vector<Rational>> a(g, std::vector<Rational>(g));
  for (std::size_t s = 0; s < g; ++s) {
    const auto si = inv(group[s]);
    for (std::size_t t = 0; t < g; ++t) {
      std::vector<int> prod(n);
      for (std::size_t i = 0; i < n; ++i) prod[i] = si[group[t][i]];
      Rational v = 1;
      for (std::size_t k = cycles(prod); k > 0; --k) v *= big_n;
      a[s][t] = v;
    }
  }
  std::vector<Rational> rhs(g, 0);
  rhs[0] = 1;  // group[0] is the identity
  const auto w = solve(std::move(a), std::move(rhs));
  std::map<std::vector<int>, Rational> out;
  for (std::size_t s = 0; s < g && !w.empty(); ++s) out[group[s]] = w[s];
  return out;
}

// Moebius function of NC(n) by inverting the full zeta matrix, column by column.
inline std::map<std::pair<ptlab::ncpart::SetPartition, ptlab::ncpart::SetPartition>, long>
mobius_by_zeta(std::size_t n) {
  const auto nc = ptlab::ncpart::enumerate_nc(n);
  const std::size_t k = nc.size();
  std::vector<std::vector<Rational>> z(k, std::vector<Rational>(k, 0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) z[a][b] = nc[a].refines(nc[b]) ? 1 : 0;
  std::map<std::pair<ptlab::ncpart::SetPartition, ptlab::ncpart::SetPartition>, long> mu;
  for (std::size_t col = 0; col < k; ++col) {
    std::vector<Rational> e(k, 0);
    e[col] = 1;
    const auto x = solve(z, e);  // column col of zeta^{-1}
    for (std::size_t row = 0; row < k; ++row)
      if (x[row] != 0) mu[{nc[row], nc[col]}] = x[row].get_num().get_si();
  }
  return mu;
}

inline bool crossing_free(const std::vector<int>& labels) {
  const std::size_t n = labels.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if (labels[a] == labels[c] && labels[b] == labels[d] && labels[a] != labels[b])
            return false;
  return true;
}

// Kreweras complement as the coarsest partition of the primed points 1' < 2'
// < ... (interleaved 1 1' 2 2' ...) that does not cross pi.
inline ptlab::ncpart::SetPartition kreweras_brute(const ptlab::ncpart::SetPartition& pi) {
  const std::size_t n = pi.size();
  const ptlab::ncpart::SetPartition* best = nullptr;
  const auto all = ptlab::ncpart::enumerate_set_partitions(n);
  for (const auto& sigma : all) {
    std::vector<int> labels(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[2 * i] = pi.labels()[i];
      labels[2 * i + 1] = static_cast<int>(n) + sigma.labels()[i];
    }
    if (!crossing_free(labels)) continue;
    if (!best || sigma.block_count() < best->block_count()) best = &sigma;
  }
  return *best;
}

}  // namespace oracle
