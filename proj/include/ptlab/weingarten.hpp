#pragma once

// Exact unitary Weingarten function Wg_N on S_n: the inverse of
// sigma -> N^{#(sigma)} in the group algebra, solved in the centre (class sums)
// with exact rational arithmetic.

#include <cstddef>
#include <memory>
#include <vector>

#include "ptlab/ncpart.hpp"
#include "ptlab/rational.hpp"
#include "ptlab/symmetric_group.hpp"

namespace ptlab::weingarten {

using symmetric::CycleType;
using symmetric::Permutation;

inline constexpr std::size_t kMaxDegree = 8;

class WeingartenTable {
 public:
  WeingartenTable(std::size_t n, long dimension, std::vector<CycleType> classes,
                  std::vector<Rational> values);

  std::size_t n() const noexcept { return n_; }
  long dimension() const noexcept { return dimension_; }
  const std::vector<CycleType>& classes() const noexcept { return classes_; }
  const std::vector<Rational>& values() const noexcept { return values_; }

  const Rational& value(const CycleType& type) const;
  const Rational& value(const Permutation& sigma) const;

 private:
  std::size_t n_;
  long dimension_;
  std::vector<CycleType> classes_;
  std::vector<Rational> values_;
};

// Throws SingularityError when N < n, CapacityError when n > kMaxDegree.
WeingartenTable compute_table(std::size_t n, long dimension);
// Memoised by (n, N); safe to call concurrently.
std::shared_ptr<const WeingartenTable> cached_table(std::size_t n, long dimension);

const Rational& wg(const WeingartenTable& table, const Permutation& sigma);
const Rational& wg(const WeingartenTable& table, const CycleType& type);

// Cycle type of sigma in S_{n/2} obtained by keeping one of each pair of
// equal-length cycles c, c' = q c^{-1} q of p q.
CycleType half_cycle_type(const ncpart::Pairing& p, const ncpart::Pairing& q);
// Wg_N(p, q); the table must be for degree n/2.
const Rational& wg_pairings(const WeingartenTable& table, const ncpart::Pairing& p,
                            const ncpart::Pairing& q);

struct LeadingTerm {
  BigInt coefficient;  // w1(sigma) = prod (-1)^{l_i - 1} Cat_{l_i - 1}
  long exponent;       // -2n + #(sigma)
};
LeadingTerm leading_term(const CycleType& type);
LeadingTerm leading_term(const Permutation& sigma);

}  // namespace ptlab::weingarten
