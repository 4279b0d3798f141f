#include "ptlab/symmetric_group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ptlab/errors.hpp"

namespace ptlab::symmetric {

CycleType::CycleType(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  for (auto p : parts_)
    if (p == 0) throw DomainError("cycle type with a zero part");
  std::sort(parts_.rbegin(), parts_.rend());
}

std::size_t CycleType::n() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

std::string CycleType::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s + "]";
}

Permutation identity(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ContractError("compose: permutations of different degree");
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

CycleType cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<std::size_t> lengths;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return CycleType(std::move(lengths));
}

std::size_t cycle_count(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t count = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(p[x])) seen[x] = true;
  }
  return count;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  Permutation p = identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<CycleType> conjugacy_classes(std::size_t n) {
  std::vector<CycleType> out;
  std::vector<std::size_t> parts;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t cap) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (std::size_t part = 1; part <= std::min(remaining, cap); ++part) {
      parts.push_back(part);
      rec(remaining - part, part);
      parts.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Permutation class_representative(const CycleType& type) {
  Permutation p(type.n());
  std::size_t start = 0;
  for (std::size_t len : type.parts()) {
    for (std::size_t k = 0; k < len; ++k)
      p[start + k] = static_cast<int>(start + (k + 1) % len);
    start += len;
  }
  return p;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace ptlab::symmetric
