#include "ptlab/moments.hpp"

#include <algorithm>
#include <unordered_set>

#include "ptlab/errors.hpp"
#include "ptlab/symmetric_group.hpp"
#include "ptlab/weingarten.hpp"

namespace ptlab::moments {

Word::Word(std::vector<Letter> letters, std::size_t dimension)
    : letters_(std::move(letters)), dimension_(dimension) {
  if (letters_.empty()) throw ContractError("a word needs at least one letter");
  if (dimension_ == 0) throw DomainError("matrix dimension must be positive");
  for (const auto& l : letters_)
    if (l.perm.domain_size() != dimension_)
      throw ContractError("letter " + l.label + ":" + l.perm.describe() + " acts on [" +
                          std::to_string(l.perm.domain_size()) + "]^2 but N = " +
                          std::to_string(dimension_));
}

std::vector<std::string> Word::labels() const {
  std::vector<std::string> out;
  for (const auto& l : letters_)
    if (std::find(out.begin(), out.end(), l.label) == out.end()) out.push_back(l.label);
  return out;
}

ncpart::SignString Word::signs() const {
  ncpart::SignString eps;
  for (const auto& l : letters_) eps.push_back(l.exponent);
  return eps;
}

bool Word::is_balanced() const {
  for (const auto& label : labels()) {
    long balance = 0;
    for (const auto& l : letters_)
      if (l.label == label) balance += l.exponent == Sign::One ? 1 : -1;
    if (balance != 0) return false;
  }
  return true;
}

Word Word::rotated(std::size_t shift) const {
  std::vector<Letter> out(letters_);
  std::rotate(out.begin(), out.begin() + static_cast<long>(shift % out.size()), out.end());
  return Word(std::move(out), dimension_);
}

std::string Word::describe() const {
  std::string s;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) s += " ";
    s += letters_[k].label + ":" + letters_[k].perm.describe();
    if (letters_[k].exponent == Sign::Star) s += "'";
  }
  return s;
}

namespace {

// Per letter, the flat entry (k_s, l_s) = sigma_s o eps_s (i, j) for every (i, j).
std::vector<std::vector<std::uint32_t>> entry_tables(const Word& word) {
  const std::size_t n = word.dimension();
  std::vector<std::vector<std::uint32_t>> tables;
  for (const auto& letter : word.letters()) {
    std::vector<std::uint32_t> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t a = i, b = j;
        if (letter.exponent == Sign::Star) std::swap(a, b);
        letter.perm.apply0(a, b);
        t[i * n + j] = static_cast<std::uint32_t>(a * n + b);
      }
    tables.push_back(std::move(t));
  }
  return tables;
}

std::uint64_t checked_tuple_count(const Word& word, const ExactOptions& options) {
  std::uint64_t total = 1;
  for (std::size_t s = 0; s < word.size(); ++s) {
    if (total > options.max_index_tuples / word.dimension())
      throw CapacityError("exact evaluation: N^n = " + std::to_string(word.dimension()) + "^" +
                          std::to_string(word.size()) + " exceeds the budget of " +
                          std::to_string(options.max_index_tuples) + " index tuples");
    total *= word.dimension();
  }
  return total;
}

// Calls visit(entries) for every i in [N]^n, entries[s] = flat (k_s, l_s).
template <class Visit>
void for_each_index_tuple(const Word& word, const ExactOptions& options, Visit&& visit) {
  checked_tuple_count(word, options);
  const std::size_t n = word.size();
  const std::size_t dim = word.dimension();
  const auto tables = entry_tables(word);
  std::vector<std::size_t> i(n, 0);
  std::vector<std::uint32_t> entries(n);
  while (true) {
    for (std::size_t s = 0; s < n; ++s) entries[s] = tables[s][i[s] * dim + i[(s + 1) % n]];
    visit(i, entries);
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++i[pos] < dim) break;
      i[pos] = 0;
      if (pos == 0) return;
    }
  }
}

}  // namespace

Rational exact_trace_expectation_direct(const Word& word, const ExactOptions& options) {
  if (word.labels().size() != 1)
    throw ContractError("direct route handles a single matrix label; use the pairing route");
  if (!word.is_balanced()) return 0;

  std::vector<std::size_t> plain, starred;
  for (std::size_t s = 0; s < word.size(); ++s)
    (word.letters()[s].exponent == Sign::One ? plain : starred).push_back(s);
  const std::size_t k = plain.size();
  const std::size_t dim = word.dimension();
  const auto table = weingarten::cached_table(k, static_cast<long>(dim));

  const auto group = symmetric::all_permutations(k);
  // Class of sigma^{-1} pi for every pair, as an index into the table.
  std::vector<std::size_t> pair_class(group.size() * group.size());
  const auto& classes = table->classes();
  for (std::size_t a = 0; a < group.size(); ++a)
    for (std::size_t b = 0; b < group.size(); ++b) {
      const auto t = symmetric::cycle_type(
          symmetric::compose(symmetric::inverse(group[a]), group[b]));
      pair_class[a * group.size() + b] = static_cast<std::size_t>(
          std::find(classes.begin(), classes.end(), t) - classes.begin());
    }

  std::vector<std::uint64_t> class_counts(classes.size(), 0);
  std::vector<std::size_t> row_ok, col_ok;
  for_each_index_tuple(word, options, [&](const auto&, const std::vector<std::uint32_t>& e) {
    // E(u_{i_1 j_1} .. u_{i_k j_k} conj(u_{i'_1 j'_1}) ..): rows i_a = i'_{sigma(a)},
    // columns j_a = j'_{pi(a)}.
    row_ok.clear();
    col_ok.clear();
    for (std::size_t g = 0; g < group.size(); ++g) {
      bool rows = true, cols = true;
      for (std::size_t a = 0; a < k && (rows || cols); ++a) {
        const std::uint32_t u = e[plain[a]], v = e[starred[group[g][a]]];
        rows = rows && (u / dim == v / dim);
        cols = cols && (u % dim == v % dim);
      }
      if (rows) row_ok.push_back(g);
      if (cols) col_ok.push_back(g);
    }
    for (auto s : row_ok)
      for (auto p : col_ok) ++class_counts[pair_class[s * group.size() + p]];
  });

  Rational total = 0;
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (class_counts[c]) total += table->values()[c] * BigInt(static_cast<unsigned long>(class_counts[c]));
  return total / static_cast<long>(dim);
}

std::vector<Pairing> admissible_pairings(const Word& word) {
  std::vector<Pairing> out;
  for (auto& p : ncpart::enumerate_eps_pairings(word.signs())) {
    bool same_label = true;
    for (std::size_t s = 1; s <= word.size() && same_label; ++s)
      same_label = word.letters()[s - 1].label == word.letters()[p.partner(s) - 1].label;
    if (same_label) out.push_back(std::move(p));
  }
  return out;
}

namespace {

void require_admissible(const Word& word, const Pairing& p) {
  if (p.size() != word.size()) throw ContractError("pairing size differs from word length");
  for (std::size_t s = 1; s <= word.size(); ++s) {
    const auto& a = word.letters()[s - 1];
    const auto& b = word.letters()[p.partner(s) - 1];
    if (a.exponent == b.exponent) throw ContractError("pairing joins equal exponents");
    if (a.label != b.label) throw ContractError("pairing joins different matrix labels");
  }
}

}  // namespace

std::uint64_t count_a(const Word& word, const Pairing& p, const Pairing& q,
                      const ExactOptions& options) {
  require_admissible(word, p);
  require_admissible(word, q);
  const std::size_t dim = word.dimension();
  const auto& pp = p.partners0();
  const auto& qq = q.partners0();
  std::uint64_t count = 0;
  for_each_index_tuple(word, options, [&](const auto&, const std::vector<std::uint32_t>& e) {
    for (std::size_t s = 0; s < e.size(); ++s) {
      if (e[s] / dim != e[pp[s]] / dim) return;
      if (e[s] % dim != e[qq[s]] % dim) return;
    }
    ++count;
  });
  return count;
}

std::uint64_t count_f(const Word& word, const Pairing& p, const Pairing& q, std::size_t first,
                      std::size_t length, const ExactOptions& options) {
  require_admissible(word, p);
  require_admissible(word, q);
  const std::size_t n = word.size();
  if (first < 1 || length < 1 || first + length - 1 > n)
    throw DomainError("count_f: S must be a nonempty interval inside [n]");
  const std::size_t dim = word.dimension();
  const auto& pp = p.partners0();
  const auto& qq = q.partners0();
  // (i_s, j_s)_{s in S} is determined by i_first .. i_{first+length} (cyclic).
  std::unordered_set<std::uint64_t> seen;
  for_each_index_tuple(word, options,
                       [&](const std::vector<std::size_t>& i, const std::vector<std::uint32_t>& e) {
                         for (std::size_t s = 0; s < n; ++s) {
                           if (e[s] / dim != e[pp[s]] / dim) return;
                           if (e[s] % dim != e[qq[s]] % dim) return;
                         }
                         std::uint64_t key = 0;
                         for (std::size_t t = 0; t <= length; ++t)
                           key = key * dim + i[(first - 1 + t) % n];
                         seen.insert(key);
                       });
  return seen.size();
}

Rational weingarten_weight(const Word& word, const Pairing& p, const Pairing& q) {
  require_admissible(word, p);
  require_admissible(word, q);
  Rational weight = 1;
  for (const auto& label : word.labels()) {
    std::vector<std::size_t> positions;  // 0-based
    for (std::size_t s = 0; s < word.size(); ++s)
      if (word.letters()[s].label == label) positions.push_back(s);
    auto restrict = [&](const Pairing& r) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t a = 0; a < positions.size(); ++a) {
        const std::size_t partner = r.partners0()[positions[a]];
        const auto b = static_cast<std::size_t>(
            std::find(positions.begin(), positions.end(), partner) - positions.begin());
        if (a < b) pairs.emplace_back(a + 1, b + 1);
      }
      return Pairing::from_pairs(positions.size(), pairs);
    };
    const auto table = weingarten::cached_table(positions.size() / 2,
                                                static_cast<long>(word.dimension()));
    weight *= weingarten::wg_pairings(*table, restrict(p), restrict(q));
  }
  return weight;
}

Rational v_pq(const Word& word, const Pairing& p, const Pairing& q, const ExactOptions& options) {
  const Rational weight = weingarten_weight(word, p, q);
  const std::uint64_t a = count_a(word, p, q, options);
  return weight * BigInt(static_cast<unsigned long>(a)) / static_cast<long>(word.dimension());
}

Rational exact_trace_expectation_pairing(const Word& word, const ExactOptions& options) {
  if (!word.is_balanced()) return 0;
  checked_tuple_count(word, options);
  const auto pairings = admissible_pairings(word);
  Rational total = 0;
  for (const auto& p : pairings)
    for (const auto& q : pairings) total += v_pq(word, p, q, options);
  return total;
}

}  // namespace ptlab::moments
