#pragma once

// Small permutation toolkit for S_n, n <= 10: one-line notation (0-based
// images), cycle types, conjugacy-class representatives.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace ptlab::symmetric {

// p[i] is the image of i (0-based).
using Permutation = std::vector<int>;

class CycleType {
 public:
  CycleType() = default;
  // Any order; zero parts rejected.
  explicit CycleType(std::vector<std::size_t> parts);

  const std::vector<std::size_t>& parts() const noexcept { return parts_; }
  std::size_t n() const noexcept;
  std::size_t cycle_count() const noexcept { return parts_.size(); }
  // "[3,1,1]"
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

 private:
  std::vector<std::size_t> parts_;  // descending
};

Permutation identity(std::size_t n);
Permutation compose(const Permutation& a, const Permutation& b);  // a o b
Permutation inverse(const Permutation& p);
bool is_permutation(const Permutation& p);

CycleType cycle_type(const Permutation& p);
std::size_t cycle_count(const Permutation& p);

// Lexicographic order, starting at the identity.
std::vector<Permutation> all_permutations(std::size_t n);

// All cycle types of S_n, identity class [1,...,1] first, [n] last.
std::vector<CycleType> conjugacy_classes(std::size_t n);
// The permutation with consecutive cycles (0 1 .. l1-1)(l1 ..) ...
Permutation class_representative(const CycleType& type);

std::size_t factorial(std::size_t n);

}  // namespace ptlab::symmetric
