#include "ptlab/ncpart.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "ptlab/errors.hpp"

namespace ptlab::ncpart {

namespace {

std::vector<int> canonicalize(const std::vector<int>& labels) {
  std::map<int, int> relabel;
  std::vector<int> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = relabel.try_emplace(labels[i], static_cast<int>(relabel.size()));
    out[i] = it->second;
  }
  return out;
}

}  // namespace

SetPartition::SetPartition(std::vector<int> canonical_labels) : labels_(std::move(canonical_labels)) {
  int top = -1;
  for (int l : labels_) top = std::max(top, l);
  block_count_ = static_cast<std::size_t>(top + 1);
}

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
  return SetPartition(canonicalize(labels));
}

SetPartition SetPartition::from_blocks(std::size_t n,
                                       const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<int> labels(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw ContractError("set partition: empty block");
    for (std::size_t e : blocks[b]) {
      if (e < 1 || e > n) throw DomainError("set partition: element outside [n]");
      if (labels[e - 1] != -1) throw ContractError("set partition: blocks overlap");
      labels[e - 1] = static_cast<int>(b);
    }
  }
  for (int l : labels)
    if (l == -1) throw ContractError("set partition: blocks do not cover [n]");
  return from_labels(labels);
}

SetPartition SetPartition::discrete(std::size_t n) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return SetPartition(std::move(labels));
}

SetPartition SetPartition::full(std::size_t n) { return SetPartition(std::vector<int>(n, 0)); }

std::vector<std::vector<std::size_t>> SetPartition::blocks() const {
  std::vector<std::vector<std::size_t>> out(block_count_);
  for (std::size_t i = 0; i < labels_.size(); ++i) out[labels_[i]].push_back(i + 1);
  return out;
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (coarser.size() != size()) throw ContractError("refines: partitions of different sets");
  std::vector<int> image(block_count_, -1);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    int& slot = image[labels_[i]];
    if (slot == -1)
      slot = coarser.labels_[i];
    else if (slot != coarser.labels_[i])
      return false;
  }
  return true;
}

std::string SetPartition::to_string() const {
  std::string s = "{";
  bool first_block = true;
  for (const auto& block : blocks()) {
    if (!first_block) s += ",";
    first_block = false;
    s += "(";
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(block[k]);
    }
    s += ")";
  }
  return s + "}";
}

Pairing Pairing::from_pairs(std::size_t n,
                            const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  if (n % 2 != 0) throw ContractError("pairing of an odd set");
  std::vector<std::size_t> partner(n, n);
  for (auto [a, b] : pairs) {
    if (a < 1 || a > n || b < 1 || b > n || a == b) throw DomainError("pairing: bad pair");
    if (partner[a - 1] != n || partner[b - 1] != n) throw ContractError("pairing: pairs overlap");
    partner[a - 1] = b - 1;
    partner[b - 1] = a - 1;
  }
  for (auto p : partner)
    if (p == n) throw ContractError("pairing: pairs do not cover [n]");
  return Pairing(std::move(partner));
}

Pairing Pairing::from_partition(const SetPartition& partition) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& block : partition.blocks()) {
    if (block.size() != 2) throw ContractError("pairing: partition has a block of size != 2");
    pairs.emplace_back(block[0], block[1]);
  }
  return from_pairs(partition.size(), pairs);
}

SetPartition Pairing::to_partition() const {
  std::vector<int> labels(partner_.size());
  for (std::size_t i = 0; i < partner_.size(); ++i)
    labels[i] = static_cast<int>(std::min(i, partner_[i]));
  return SetPartition::from_labels(labels);
}

std::string Pairing::to_string() const { return to_partition().to_string(); }

SignString parse_signs(const std::string& text) {
  // Two spellings: sign digits "1*1*", or letters where a trailing '*' marks
  // the adjoint, "uu*uu*".
  SignString eps;
  char prev = ' ';
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '*') {
      if (std::isalpha(static_cast<unsigned char>(prev)))
        eps.back() = Sign::Star;
      else
        eps.push_back(Sign::Star);
    } else if (c == '1' || std::isalpha(static_cast<unsigned char>(c))) {
      eps.push_back(Sign::One);
    } else if (c != ' ' && c != ',') {
      throw ParseError(std::string("unexpected character '") + c + "' in sign pattern", pos);
    }
    prev = c;
  }
  return eps;
}

std::string to_string(const SignString& eps) {
  std::string s;
  for (Sign e : eps) s += e == Sign::One ? "1" : "*";
  return s;
}

std::uint64_t catalan(std::size_t n) {
  if (n > 33) throw CapacityError("catalan: n > 33 overflows 64 bits");
  std::uint64_t c = 1;
  for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::uint64_t double_factorial(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t k = n; k > 1; k -= 2) r *= k;
  return r;
}

namespace {

void pairings_rec(std::vector<std::size_t>& partner, std::size_t n, const SignString* eps,
                  std::vector<Pairing>& out, const std::function<Pairing(std::vector<std::size_t>)>& make) {
  std::size_t first = 0;
  while (first < n && partner[first] != n) ++first;
  if (first == n) {
    out.push_back(make(partner));
    return;
  }
  for (std::size_t other = first + 1; other < n; ++other) {
    if (partner[other] != n) continue;
    if (eps && (*eps)[first] == (*eps)[other]) continue;
    partner[first] = other;
    partner[other] = first;
    pairings_rec(partner, n, eps, out, make);
    partner[first] = n;
    partner[other] = n;
  }
}

std::vector<Pairing> pairings_impl(std::size_t n, const SignString* eps) {
  std::vector<Pairing> out;
  if (n % 2 != 0) return out;
  std::vector<std::size_t> partner(n, n);
  auto make = [n](std::vector<std::size_t> p) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      if (i < p[i]) pairs.emplace_back(i + 1, p[i] + 1);
    return Pairing::from_pairs(n, pairs);
  };
  pairings_rec(partner, n, eps, out, make);
  return out;
}

}  // namespace

std::vector<Pairing> enumerate_pairings(std::size_t n) { return pairings_impl(n, nullptr); }

std::vector<Pairing> enumerate_eps_pairings(const SignString& eps) {
  return pairings_impl(eps.size(), &eps);
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
  if (a.size() != b.size()) throw ContractError("join: partitions of different sets");
  const std::size_t n = a.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const SetPartition* p : {&a, &b}) {
    std::vector<std::size_t> first(p->block_count(), n);
    for (std::size_t i = 0; i < n; ++i) {
      auto& f = first[p->labels()[i]];
      if (f == n)
        f = i;
      else
        parent[find(i)] = find(f);
    }
  }
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(find(i));
  return SetPartition::from_labels(labels);
}

std::vector<std::size_t> product_cycle_type(const Pairing& p, const Pairing& q) {
  if (p.size() != q.size()) throw ContractError("product_cycle_type: size mismatch");
  const std::size_t n = p.size();
  const auto& pp = p.partners0();
  const auto& qq = q.partners0();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> lengths;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !seen[x]; x = pp[qq[x]]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

bool is_noncrossing(const SetPartition& partition) {
  const auto& l = partition.labels();
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (l[b] == l[a]) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (l[c] != l[a]) continue;
        for (std::size_t d = c + 1; d < n; ++d)
          if (l[d] == l[b]) return false;
      }
    }
  return true;
}

std::vector<SetPartition> enumerate_set_partitions(std::size_t n) {
  std::vector<SetPartition> out;
  std::vector<int> rgs(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int top) {
    if (i == n) {
      out.push_back(SetPartition::from_labels(rgs));
      return;
    }
    for (int l = 0; l <= top + 1; ++l) {
      rgs[i] = l;
      rec(i + 1, std::max(top, l));
    }
  };
  rec(0, -1);
  return out;
}

std::vector<SetPartition> enumerate_nc(std::size_t n) {
  std::vector<SetPartition> out;
  std::vector<int> rgs(n, 0);
  std::vector<std::size_t> first, last;  // per block, 0-based positions
  // Joining element i to block L keeps the partition non-crossing iff every
  // element strictly between last(L) and i sits in a block opened after last(L).
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.push_back(SetPartition::from_labels(rgs));
      return;
    }
    for (std::size_t l = 0; l <= first.size(); ++l) {
      if (l < first.size()) {
        bool ok = true;
        for (std::size_t j = last[l] + 1; j < i && ok; ++j) ok = first[rgs[j]] > last[l];
        if (!ok) continue;
        const std::size_t saved = last[l];
        rgs[i] = static_cast<int>(l);
        last[l] = i;
        rec(i + 1);
        last[l] = saved;
      } else {
        rgs[i] = static_cast<int>(l);
        first.push_back(i);
        last.push_back(i);
        rec(i + 1);
        first.pop_back();
        last.pop_back();
      }
    }
  };
  rec(0);
  return out;
}

bool is_eps_alternating(const SetPartition& partition, const SignString& eps) {
  if (eps.size() != partition.size()) throw ContractError("sign string length mismatch");
  for (const auto& block : partition.blocks()) {
    if (block.size() % 2 != 0) return false;
    for (std::size_t k = 0; k + 1 < block.size(); ++k)
      if (eps[block[k] - 1] == eps[block[k + 1] - 1]) return false;
  }
  return true;
}

std::vector<SetPartition> enumerate_nc_eps_alt(const SignString& eps) {
  std::vector<SetPartition> out;
  for (auto& p : enumerate_nc(eps.size()))
    if (is_eps_alternating(p, eps)) out.push_back(std::move(p));
  return out;
}

SetPartition kreweras(const SetPartition& partition) {
  if (!is_noncrossing(partition)) throw ContractError("kreweras: partition is crossing");
  const std::size_t n = partition.size();
  // As a permutation, each block is a cycle in increasing order; Kr = pi^{-1} gamma.
  std::vector<std::size_t> pi_inv(n);
  for (const auto& block : partition.blocks())
    for (std::size_t k = 0; k < block.size(); ++k)
      pi_inv[block[(k + 1) % block.size()] - 1] = block[k] - 1;
  std::vector<int> labels(n, -1);
  int next = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (labels[start] != -1) continue;
    for (std::size_t x = start; labels[x] == -1; x = pi_inv[(x + 1) % n]) labels[x] = next;
    ++next;
  }
  return SetPartition::from_labels(labels);
}

namespace {

struct MobiusTable {
  std::vector<SetPartition> elements;  // finer before coarser
  std::unordered_map<SetPartition, std::size_t> index;
  std::unordered_map<std::size_t, std::vector<std::int64_t>> rows;  // by sigma index
};

constexpr std::size_t kZetaCeiling = 8;

std::mutex& mobius_mutex() {
  static std::mutex m;
  return m;
}

MobiusTable& mobius_table(std::size_t n) {
  static std::map<std::size_t, std::unique_ptr<MobiusTable>> tables;
  auto& slot = tables[n];
  if (!slot) {
    slot = std::make_unique<MobiusTable>();
    slot->elements = enumerate_nc(n);
    std::stable_sort(slot->elements.begin(), slot->elements.end(),
                     [](const SetPartition& a, const SetPartition& b) {
                       return a.block_count() > b.block_count();
                     });
    for (std::size_t k = 0; k < slot->elements.size(); ++k) slot->index[slot->elements[k]] = k;
  }
  return *slot;
}

}  // namespace

std::int64_t mobius_nc(const SetPartition& sigma, const SetPartition& pi) {
  if (sigma.size() != pi.size()) throw ContractError("mobius_nc: partitions of different sets");
  if (!is_noncrossing(sigma) || !is_noncrossing(pi))
    throw ContractError("mobius_nc: arguments must be non-crossing");
  if (!sigma.refines(pi)) throw ContractError("mobius_nc: sigma is not below pi");
  const std::size_t n = sigma.size();
  if (n > kZetaCeiling) return mobius_nc_multiplicative(sigma, pi);

  std::lock_guard lock(mobius_mutex());
  MobiusTable& table = mobius_table(n);
  const std::size_t s = table.index.at(sigma);
  auto it = table.rows.find(s);
  if (it == table.rows.end()) {
    // Row s of zeta^{-1}: mu(s,s) = 1, mu(s,y) = -sum_{s <= z < y} mu(s,z).
    const auto& el = table.elements;
    std::vector<std::int64_t> row(el.size(), 0);
    std::vector<std::size_t> above;
    for (std::size_t y = 0; y < el.size(); ++y)
      if (el[s].refines(el[y])) above.push_back(y);
    for (std::size_t a = 0; a < above.size(); ++a) {
      const std::size_t y = above[a];
      if (y == s) {
        row[y] = 1;
        continue;
      }
      std::int64_t acc = 0;
      for (std::size_t c = 0; c < a; ++c) {
        const std::size_t z = above[c];
        if (z != y && el[z].refines(el[y])) acc += row[z];
      }
      row[y] = -acc;
    }
    it = table.rows.emplace(s, std::move(row)).first;
  }
  return it->second[table.index.at(pi)];
}

std::int64_t mobius_nc_multiplicative(const SetPartition& sigma, const SetPartition& pi) {
  if (!sigma.refines(pi)) throw ContractError("mobius_nc: sigma is not below pi");
  std::int64_t mu = 1;
  for (const auto& block : pi.blocks()) {
    std::vector<int> restricted;
    for (std::size_t e : block) restricted.push_back(sigma.block_of(e));
    const SetPartition kr = kreweras(SetPartition::from_labels(restricted));
    for (const auto& v : kr.blocks()) {
      const auto c = static_cast<std::int64_t>(catalan(v.size() - 1));
      mu *= (v.size() % 2 == 1) ? c : -c;
    }
  }
  return mu;
}

std::pair<Pairing, Pairing> canonical_pairings(std::size_t k) {
  if (k == 0) throw DomainError("canonical_pairings: k >= 1 required");
  const std::size_t n = 2 * k;
  auto wrap = [n](std::size_t x) { return (x + n - 1) % n + 1; };  // into 1..n
  std::vector<std::pair<std::size_t, std::size_t>> p, q;
  for (std::size_t l = 1; l <= k; ++l) {
    p.emplace_back(2 * l, wrap(2 * l + 1));
    q.emplace_back(2 * l, wrap(2 * l - 1 + n));
  }
  return {Pairing::from_pairs(n, p), Pairing::from_pairs(n, q)};
}

}  // namespace ptlab::ncpart
