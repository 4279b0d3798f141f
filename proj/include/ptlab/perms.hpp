#pragma once

// Entry permutations of [M]^2: identity, full transpose, the left/right
// partial transposes of a b x b grid of d x d blocks, and their compositions.
//
// All indices at this interface are 1-based. Internally everything is 0-based
// and flattened as i * M + j.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ptlab::perms {

class BlockShape {
 public:
  BlockShape(std::size_t b, std::size_t d);

  std::size_t b() const noexcept { return b_; }
  std::size_t d() const noexcept { return d_; }
  std::size_t m() const noexcept { return b_ * d_; }

  friend bool operator==(const BlockShape&, const BlockShape&) = default;

 private:
  std::size_t b_;
  std::size_t d_;
};

// (a1, a2, a_{-1}, a_{-2}): entry (a2, a_{-2}) of block (a1, a_{-1}).
struct Coordinates4 {
  std::size_t a1;
  std::size_t a2;
  std::size_t am1;
  std::size_t am2;

  friend bool operator==(const Coordinates4&, const Coordinates4&) = default;
};

struct Entry {
  std::size_t row;
  std::size_t col;

  friend bool operator==(const Entry&, const Entry&) = default;
};

Coordinates4 phi(const BlockShape& shape, std::size_t i, std::size_t j);
Entry phi_inverse(const BlockShape& shape, const Coordinates4& c);

// theta = -1 transposes the block grid (T (x) id), theta = +1 transposes
// inside every block (id (x) T).
enum class Side : int { Left = -1, Right = 1 };

class PermutationTable;

class EntryPermutation {
 public:
  enum class Kind { Identity, FullTranspose, PartialTranspose, Compose, Inverse };

  static EntryPermutation identity(std::size_t m);
  static EntryPermutation full_transpose(std::size_t m);
  static EntryPermutation partial_transpose(const BlockShape& shape, Side side);
  // compose({f, g, h}) maps x to f(g(h(x))).
  static EntryPermutation compose(std::vector<EntryPermutation> parts);
  static EntryPermutation inverse(const EntryPermutation& p);

  Kind kind() const noexcept { return kind_; }
  std::size_t domain_size() const noexcept { return m_; }
  // Only meaningful for Kind::PartialTranspose.
  const BlockShape& shape() const noexcept { return shape_; }
  Side side() const noexcept { return side_; }

  Entry apply(Entry e) const;
  Entry apply_inverse(Entry e) const;

  // 0-based, unchecked. Hot path for counting and matrix relocation.
  void apply0(std::size_t& i, std::size_t& j) const noexcept;
  void apply_inverse0(std::size_t& i, std::size_t& j) const noexcept;

  // Full table for repeated lookups; refuses M > 2^14.
  PermutationTable materialize() const;

  // Grammar form: I, T, G(theta,b,d), with C[..] / inv(..) for composites.
  std::string describe() const;

 private:
  EntryPermutation(Kind kind, std::size_t m, BlockShape shape, Side side)
      : kind_(kind), m_(m), shape_(shape), side_(side) {}

  void check_entry(const Entry& e) const;

  Kind kind_;
  std::size_t m_;
  BlockShape shape_;
  Side side_;
  std::shared_ptr<const std::vector<EntryPermutation>> parts_;
};

bool operator==(const EntryPermutation& a, const EntryPermutation& b);

class PermutationTable {
 public:
  static constexpr std::size_t kMaxDomain = std::size_t{1} << 14;

  PermutationTable(std::size_t m, std::vector<std::uint32_t> target);

  std::size_t domain_size() const noexcept { return m_; }
  // Flat 0-based lookup: i * M + j -> i' * M + j'.
  std::uint32_t operator[](std::size_t flat) const noexcept { return target_[flat]; }
  Entry apply(Entry e) const;
  bool is_bijection() const;

 private:
  std::size_t m_;
  std::vector<std::uint32_t> target_;
};

// |{(i,j) in [M]^2 : p1(i,j) = p2(i,j)}|
std::uint64_t fixed_point_count(const EntryPermutation& p1, const EntryPermutation& p2);

enum class OverlapMode { Full, Coord1, Coord2 };

// |{(i1,i2,j) in [M]^3 : key(p1(i1,j)) = key(p2(i2,j))}| where key is the whole
// entry (Full) or only its first/second coordinate.
std::uint64_t overlap_triple_count(const EntryPermutation& p1, const EntryPermutation& p2,
                                   OverlapMode mode);

}  // namespace ptlab::perms
