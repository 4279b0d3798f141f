#pragma once

// Set partitions of [n], pairings, and the non-crossing partition lattice:
// join, crossing test, Kreweras complement, Moebius function.
//
// Partitions are stored as restricted growth strings (block labels in order of
// first appearance), which makes the canonical form, equality and hashing
// trivial. Element indices at the interface are 1-based.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace ptlab::ncpart {

class SetPartition {
 public:
  SetPartition() = default;
  // Blocks use 1-based elements; they must be disjoint, nonempty and cover [n].
  static SetPartition from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks);
  // Labels need not be canonical; equal labels mean same block.
  static SetPartition from_labels(const std::vector<int>& labels);
  static SetPartition discrete(std::size_t n);
  static SetPartition full(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t block_count() const noexcept { return block_count_; }
  // 0-based label of the block holding 1-based element `element`.
  int block_of(std::size_t element) const { return labels_.at(element - 1); }
  const std::vector<int>& labels() const noexcept { return labels_; }
  // Sorted by least element, each block sorted, 1-based.
  std::vector<std::vector<std::size_t>> blocks() const;

  // Refinement order: every block of *this lies inside a block of `coarser`.
  bool refines(const SetPartition& coarser) const;

  std::string to_string() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  explicit SetPartition(std::vector<int> canonical_labels);

  std::vector<int> labels_;
  std::size_t block_count_ = 0;
};

// A fixed-point-free involution of [n].
class Pairing {
 public:
  static Pairing from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  static Pairing from_partition(const SetPartition& partition);

  std::size_t size() const noexcept { return partner_.size(); }
  std::size_t partner(std::size_t element) const { return partner_.at(element - 1) + 1; }
  // 0-based partner table, for hot loops.
  const std::vector<std::size_t>& partners0() const noexcept { return partner_; }
  SetPartition to_partition() const;
  std::string to_string() const;

  friend bool operator==(const Pairing&, const Pairing&) = default;
  friend auto operator<=>(const Pairing&, const Pairing&) = default;

 private:
  explicit Pairing(std::vector<std::size_t> partner) : partner_(std::move(partner)) {}
  std::vector<std::size_t> partner_;
};

enum class Sign : std::uint8_t { One, Star };
using SignString = std::vector<Sign>;

// "1*1*" or "u u* u u*" style: '*' after a letter/digit marks Star.
SignString parse_signs(const std::string& text);
std::string to_string(const SignString& eps);

std::uint64_t catalan(std::size_t n);
std::uint64_t double_factorial(std::size_t n);

std::vector<Pairing> enumerate_pairings(std::size_t n);
// Pairings joining only opposite signs.
std::vector<Pairing> enumerate_eps_pairings(const SignString& eps);

SetPartition join(const SetPartition& a, const SetPartition& b);

// Cycle lengths of the permutation p o q, sorted descending.
std::vector<std::size_t> product_cycle_type(const Pairing& p, const Pairing& q);

bool is_noncrossing(const SetPartition& partition);

std::vector<SetPartition> enumerate_set_partitions(std::size_t n);
std::vector<SetPartition> enumerate_nc(std::size_t n);
// Non-crossing, every block of even size with signs alternating along the block.
std::vector<SetPartition> enumerate_nc_eps_alt(const SignString& eps);
bool is_eps_alternating(const SetPartition& partition, const SignString& eps);

SetPartition kreweras(const SetPartition& partition);

// Moebius function of the NC lattice on [sigma, pi]. For n <= 8 it comes from a
// memoised triangular inversion of the zeta matrix of NC(n); above that from
// the product formula over Kreweras complements of the restricted blocks.
std::int64_t mobius_nc(const SetPartition& sigma, const SetPartition& pi);
// Product formula only; independent of the zeta-matrix route.
std::int64_t mobius_nc_multiplicative(const SetPartition& sigma, const SetPartition& pi);

// (p~_k, q~_k) on [2k]: p~ pairs 2l with 2l+1, q~ pairs 2l with 2l-1 (mod 2k).
std::pair<Pairing, Pairing> canonical_pairings(std::size_t k);

}  // namespace ptlab::ncpart

template <>
struct std::hash<ptlab::ncpart::SetPartition> {
  std::size_t operator()(const ptlab::ncpart::SetPartition& p) const noexcept {
    std::size_t h = p.size();
    for (int l : p.labels()) h = h * 1000003u ^ static_cast<std::size_t>(l);
    return h;
  }
};
