#include "ptlab/perms.hpp"

#include <algorithm>
#include <numeric>

#include "ptlab/errors.hpp"

namespace ptlab::perms {

BlockShape::BlockShape(std::size_t b, std::size_t d) : b_(b), d_(d) {
  if (b == 0 || d == 0) throw DomainError("block shape needs b >= 1 and d >= 1");
}

Coordinates4 phi(const BlockShape& shape, std::size_t i, std::size_t j) {
  const std::size_t m = shape.m();
  if (i < 1 || i > m || j < 1 || j > m)
    throw DomainError("phi: index (" + std::to_string(i) + "," + std::to_string(j) +
                      ") outside [" + std::to_string(m) + "]^2");
  const std::size_t d = shape.d();
  return {(i - 1) / d + 1, (i - 1) % d + 1, (j - 1) / d + 1, (j - 1) % d + 1};
}

Entry phi_inverse(const BlockShape& shape, const Coordinates4& c) {
  const std::size_t b = shape.b();
  const std::size_t d = shape.d();
  auto in = [](std::size_t x, std::size_t hi) { return x >= 1 && x <= hi; };
  if (!in(c.a1, b) || !in(c.am1, b) || !in(c.a2, d) || !in(c.am2, d))
    throw DomainError("phi_inverse: coordinate out of range for the block shape");
  return {(c.a1 - 1) * d + c.a2, (c.am1 - 1) * d + c.am2};
}

EntryPermutation EntryPermutation::identity(std::size_t m) {
  if (m == 0) throw DomainError("entry permutation needs M >= 1");
  return {Kind::Identity, m, BlockShape(1, m), Side::Right};
}

EntryPermutation EntryPermutation::full_transpose(std::size_t m) {
  if (m == 0) throw DomainError("entry permutation needs M >= 1");
  return {Kind::FullTranspose, m, BlockShape(1, m), Side::Right};
}

EntryPermutation EntryPermutation::partial_transpose(const BlockShape& shape, Side side) {
  return {Kind::PartialTranspose, shape.m(), shape, side};
}

EntryPermutation EntryPermutation::compose(std::vector<EntryPermutation> parts) {
  if (parts.empty()) throw ContractError("compose needs at least one permutation");
  const std::size_t m = parts.front().domain_size();
  for (const auto& p : parts)
    if (p.domain_size() != m) throw ContractError("compose: mismatched domain sizes");
  EntryPermutation out{Kind::Compose, m, BlockShape(1, m), Side::Right};
  out.parts_ = std::make_shared<const std::vector<EntryPermutation>>(std::move(parts));
  return out;
}

EntryPermutation EntryPermutation::inverse(const EntryPermutation& p) {
  EntryPermutation out{Kind::Inverse, p.domain_size(), BlockShape(1, p.domain_size()),
                       Side::Right};
  out.parts_ = std::make_shared<const std::vector<EntryPermutation>>(1, p);
  return out;
}

void EntryPermutation::apply0(std::size_t& i, std::size_t& j) const noexcept {
  switch (kind_) {
    case Kind::Identity:
      return;
    case Kind::FullTranspose:
      std::swap(i, j);
      return;
    case Kind::PartialTranspose: {
      const std::size_t d = shape_.d();
      const std::size_t a1 = i / d, a2 = i % d, am1 = j / d, am2 = j % d;
      if (side_ == Side::Right) {
        i = a1 * d + am2;
        j = am1 * d + a2;
      } else {
        i = am1 * d + a2;
        j = a1 * d + am2;
      }
      return;
    }
    case Kind::Compose:
      for (auto it = parts_->rbegin(); it != parts_->rend(); ++it) it->apply0(i, j);
      return;
    case Kind::Inverse:
      (*parts_)[0].apply_inverse0(i, j);
      return;
  }
}

void EntryPermutation::apply_inverse0(std::size_t& i, std::size_t& j) const noexcept {
  switch (kind_) {
    case Kind::Identity:
    case Kind::FullTranspose:
    case Kind::PartialTranspose:
      // involutions
      apply0(i, j);
      return;
    case Kind::Compose:
      for (const auto& p : *parts_) p.apply_inverse0(i, j);
      return;
    case Kind::Inverse:
      (*parts_)[0].apply0(i, j);
      return;
  }
}

void EntryPermutation::check_entry(const Entry& e) const {
  if (e.row < 1 || e.row > m_ || e.col < 1 || e.col > m_)
    throw DomainError("entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                      ") outside [" + std::to_string(m_) + "]^2");
}

Entry EntryPermutation::apply(Entry e) const {
  check_entry(e);
  std::size_t i = e.row - 1, j = e.col - 1;
  apply0(i, j);
  return {i + 1, j + 1};
}

Entry EntryPermutation::apply_inverse(Entry e) const {
  check_entry(e);
  std::size_t i = e.row - 1, j = e.col - 1;
  apply_inverse0(i, j);
  return {i + 1, j + 1};
}

PermutationTable EntryPermutation::materialize() const {
  if (m_ > PermutationTable::kMaxDomain)
    throw CapacityError("materialize: M = " + std::to_string(m_) + " exceeds 2^14");
  std::vector<std::uint32_t> target(m_ * m_);
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) {
      std::size_t a = i, c = j;
      apply0(a, c);
      target[i * m_ + j] = static_cast<std::uint32_t>(a * m_ + c);
    }
  }
  return {m_, std::move(target)};
}

std::string EntryPermutation::describe() const {
  switch (kind_) {
    case Kind::Identity:
      return "I";
    case Kind::FullTranspose:
      return "T";
    case Kind::PartialTranspose:
      return "G(" + std::to_string(static_cast<int>(side_)) + "," + std::to_string(shape_.b()) +
             "," + std::to_string(shape_.d()) + ")";
    case Kind::Compose: {
      std::string s = "C[";
      for (std::size_t k = 0; k < parts_->size(); ++k) {
        if (k) s += ",";
        s += (*parts_)[k].describe();
      }
      return s + "]";
    }
    case Kind::Inverse:
      return "inv(" + (*parts_)[0].describe() + ")";
  }
  return "?";
}

bool operator==(const EntryPermutation& a, const EntryPermutation& b) {
  if (a.domain_size() != b.domain_size()) return false;
  return fixed_point_count(a, b) == a.domain_size() * a.domain_size();
}

PermutationTable::PermutationTable(std::size_t m, std::vector<std::uint32_t> target)
    : m_(m), target_(std::move(target)) {
  if (target_.size() != m_ * m_) throw ContractError("permutation table has wrong size");
}

Entry PermutationTable::apply(Entry e) const {
  if (e.row < 1 || e.row > m_ || e.col < 1 || e.col > m_)
    throw DomainError("table lookup outside [M]^2");
  const std::uint32_t t = target_[(e.row - 1) * m_ + (e.col - 1)];
  return {t / m_ + 1, t % m_ + 1};
}

bool PermutationTable::is_bijection() const {
  std::vector<bool> seen(target_.size(), false);
  for (auto t : target_) {
    if (t >= target_.size() || seen[t]) return false;
    seen[t] = true;
  }
  return true;
}

namespace {

void require_same_domain(const EntryPermutation& p1, const EntryPermutation& p2) {
  if (p1.domain_size() != p2.domain_size())
    throw ContractError("entry permutations act on different [M]^2 (" +
                        std::to_string(p1.domain_size()) + " vs " +
                        std::to_string(p2.domain_size()) + ")");
}

}  // namespace

std::uint64_t fixed_point_count(const EntryPermutation& p1, const EntryPermutation& p2) {
  require_same_domain(p1, p2);
  const std::size_t m = p1.domain_size();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t a = i, b = j, c = i, d = j;
      p1.apply0(a, b);
      p2.apply0(c, d);
      count += (a == c && b == d);
    }
  }
  return count;
}

std::uint64_t overlap_triple_count(const EntryPermutation& p1, const EntryPermutation& p2,
                                   OverlapMode mode) {
  require_same_domain(p1, p2);
  const std::size_t m = p1.domain_size();
  std::uint64_t count = 0;

  auto key = [&](std::size_t a, std::size_t b) -> std::uint64_t {
    switch (mode) {
      case OverlapMode::Full:
        return static_cast<std::uint64_t>(a) * m + b;
      case OverlapMode::Coord1:
        return a;
      case OverlapMode::Coord2:
        return b;
    }
    return 0;
  };

  // For each column j, match the multiset of keys of p1(., j) against p2(., j).
  std::vector<std::uint64_t> left(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t a = i, b = j;
      p1.apply0(a, b);
      left[i] = key(a, b);
    }
    std::sort(left.begin(), left.end());
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t a = i, b = j;
      p2.apply0(a, b);
      const auto k = key(a, b);
      const auto [lo, hi] = std::equal_range(left.begin(), left.end(), k);
      count += static_cast<std::uint64_t>(hi - lo);
    }
  }
  return count;
}

}  // namespace ptlab::perms
