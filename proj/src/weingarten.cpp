#include "ptlab/weingarten.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "ptlab/errors.hpp"

namespace ptlab::weingarten {

WeingartenTable::WeingartenTable(std::size_t n, long dimension, std::vector<CycleType> classes,
                                 std::vector<Rational> values)
    : n_(n), dimension_(dimension), classes_(std::move(classes)), values_(std::move(values)) {
  if (classes_.size() != values_.size()) throw ContractError("Weingarten table: size mismatch");
}

const Rational& WeingartenTable::value(const CycleType& type) const {
  if (type.n() != n_)
    throw ContractError("Weingarten lookup: cycle type of S_" + std::to_string(type.n()) +
                        " in a table for S_" + std::to_string(n_));
  const auto it = std::lower_bound(classes_.begin(), classes_.end(), type,
                                   [](const CycleType& a, const CycleType& b) { return a < b; });
  if (it == classes_.end() || *it != type) throw ContractError("Weingarten lookup: unknown class");
  return values_[static_cast<std::size_t>(it - classes_.begin())];
}

const Rational& WeingartenTable::value(const Permutation& sigma) const {
  if (sigma.size() != n_) throw ContractError("Weingarten lookup: permutation degree mismatch");
  return value(symmetric::cycle_type(sigma));
}

namespace {

// Class-algebra structure constants: c[l][m][v] = #{x in C_l : x^{-1} z_v in C_m}
// for a fixed representative z_v of class v.
struct ClassAlgebra {
  std::vector<CycleType> classes;  // sorted ascending (CycleType order)
  std::vector<std::vector<std::vector<long>>> c;
};

std::size_t class_index(const std::vector<CycleType>& classes, const CycleType& t) {
  return static_cast<std::size_t>(std::lower_bound(classes.begin(), classes.end(), t) -
                                  classes.begin());
}

const ClassAlgebra& class_algebra(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, ClassAlgebra> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  ClassAlgebra alg;
  alg.classes = symmetric::conjugacy_classes(n);
  std::sort(alg.classes.begin(), alg.classes.end());
  const std::size_t p = alg.classes.size();
  alg.c.assign(p, std::vector<std::vector<long>>(p, std::vector<long>(p, 0)));

  const auto elements = symmetric::all_permutations(n);
  std::vector<std::size_t> element_class(elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k)
    element_class[k] = class_index(alg.classes, symmetric::cycle_type(elements[k]));

  for (std::size_t v = 0; v < p; ++v) {
    const Permutation z = symmetric::class_representative(alg.classes[v]);
    for (std::size_t k = 0; k < elements.size(); ++k) {
      const Permutation y = symmetric::compose(symmetric::inverse(elements[k]), z);
      const std::size_t m = class_index(alg.classes, symmetric::cycle_type(y));
      ++alg.c[element_class[k]][m][v];
    }
  }
  return cache.emplace(n, std::move(alg)).first->second;
}

// Exact Gauss-Jordan on a square system; throws SingularityError on a zero pivot column.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw SingularityError("Weingarten class system is singular");
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t k = col; k < n; ++k) a[col][k] *= inv;
    rhs[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

WeingartenTable compute_table(std::size_t n, long dimension) {
  if (n == 0) throw DomainError("Weingarten table needs n >= 1");
  if (n > kMaxDegree)
    throw CapacityError("Weingarten table: n = " + std::to_string(n) + " exceeds ceiling " +
                        std::to_string(kMaxDegree));
  if (dimension < static_cast<long>(n))
    throw SingularityError("Weingarten function undefined for N = " + std::to_string(dimension) +
                           " < n = " + std::to_string(n));

  const ClassAlgebra& alg = class_algebra(n);
  const std::size_t p = alg.classes.size();

  // Wg * G = e with G = sum_m N^{#m} C_m and Wg = sum_l w_l C_l; the coefficient
  // of z_v in the product is sum_{l,m} w_l N^{#m} c[l][m][v].
  std::vector<Rational> n_pow(n + 1, 1);
  for (std::size_t k = 1; k <= n; ++k) n_pow[k] = n_pow[k - 1] * dimension;

  std::vector<std::vector<Rational>> a(p, std::vector<Rational>(p, 0));
  for (std::size_t v = 0; v < p; ++v)
    for (std::size_t l = 0; l < p; ++l) {
      Rational acc = 0;
      for (std::size_t m = 0; m < p; ++m)
        if (alg.c[l][m][v]) acc += n_pow[alg.classes[m].cycle_count()] * alg.c[l][m][v];
      a[v][l] = acc;
    }
  std::vector<Rational> rhs(p, 0);
  rhs[class_index(alg.classes, symmetric::cycle_type(symmetric::identity(n)))] = 1;

  return WeingartenTable(n, dimension, alg.classes, solve(std::move(a), std::move(rhs)));
}

std::shared_ptr<const WeingartenTable> cached_table(std::size_t n, long dimension) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, long>, std::shared_ptr<const WeingartenTable>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({n, dimension});
    if (it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const WeingartenTable>(compute_table(n, dimension));
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(n, dimension), std::move(table)).first->second;
}

const Rational& wg(const WeingartenTable& table, const Permutation& sigma) {
  return table.value(sigma);
}

const Rational& wg(const WeingartenTable& table, const CycleType& type) { return table.value(type); }

CycleType half_cycle_type(const ncpart::Pairing& p, const ncpart::Pairing& q) {
  const auto lengths = ncpart::product_cycle_type(p, q);  // descending
  std::vector<std::size_t> half;
  for (std::size_t k = 0; k < lengths.size(); k += 2) {
    if (k + 1 >= lengths.size() || lengths[k] != lengths[k + 1])
      throw ContractError("p q does not split into paired cycles");
    half.push_back(lengths[k]);
  }
  return CycleType(std::move(half));
}

const Rational& wg_pairings(const WeingartenTable& table, const ncpart::Pairing& p,
                            const ncpart::Pairing& q) {
  if (p.size() % 2 != 0 || p.size() != q.size())
    throw ContractError("wg_pairings: pairings must be on the same even set");
  if (p.size() / 2 != table.n())
    throw ContractError("wg_pairings: table degree must be n/2");
  return table.value(half_cycle_type(p, q));
}

LeadingTerm leading_term(const CycleType& type) {
  BigInt coefficient = 1;
  for (std::size_t l : type.parts()) {
    const BigInt c = static_cast<unsigned long>(ncpart::catalan(l - 1));
    coefficient *= (l % 2 == 1) ? c : BigInt(-c);
  }
  return {coefficient, -2 * static_cast<long>(type.n()) + static_cast<long>(type.cycle_count())};
}

LeadingTerm leading_term(const Permutation& sigma) {
  return leading_term(symmetric::cycle_type(sigma));
}

}  // namespace ptlab::weingarten
