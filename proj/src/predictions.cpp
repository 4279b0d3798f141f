#include <algorithm>

#include "ptlab/errors.hpp"
#include "ptlab/moments.hpp"

namespace ptlab::moments {

std::int64_t beta(std::size_t r) {
  if (r == 0) throw DomainError("beta_r needs r >= 1");
  const auto c = static_cast<std::int64_t>(ncpart::catalan(r - 1));
  return r % 2 == 1 ? c : -c;
}

CumulantSpec::CumulantSpec(std::string name, std::function<Rational(std::size_t)> alternating)
    : name_(std::move(name)), alternating_(std::move(alternating)) {
  if (!alternating_) throw ContractError("cumulant spec without a rule");
}

CumulantSpec CumulantSpec::haar() {
  return CumulantSpec("haar", [](std::size_t r) { return Rational(beta(r)); });
}

CumulantSpec CumulantSpec::transpose(std::size_t b) {
  if (b == 0) throw DomainError("block count must be positive");
  return CumulantSpec("transpose(b=" + std::to_string(b) + ")", [b](std::size_t r) -> Rational {
    return rational_pow(Rational(static_cast<long>(b)), 2 - 2 * static_cast<int>(r)) *
           static_cast<long>(beta(r));
  });
}

CumulantSpec CumulantSpec::block(std::size_t b) {
  if (b == 0) throw DomainError("block count must be positive");
  return CumulantSpec("block(b=" + std::to_string(b) + ")", [b](std::size_t r) -> Rational {
    return predicted_block_cumulant(r, b);
  });
}

Rational moments_from_cumulants(const std::map<std::string, CumulantSpec>& specs,
                                const Pattern& pattern) {
  ncpart::SignString eps;
  for (const auto& l : pattern) {
    if (!specs.count(l.label)) throw ContractError("no cumulant spec for label " + l.label);
    eps.push_back(l.sign);
  }
  Rational total = 0;
  for (const auto& pi : ncpart::enumerate_nc_eps_alt(eps)) {
    Rational term = 1;
    for (const auto& block : pi.blocks()) {
      const std::string& label = pattern[block.front() - 1].label;
      const bool single_label = std::all_of(block.begin(), block.end(), [&](std::size_t s) {
        return pattern[s - 1].label == label;
      });
      if (!single_label) {
        term = 0;
        break;
      }
      term *= specs.at(label).kappa(block.size() / 2);
    }
    total += term;
  }
  return total;
}

Rational moments_from_cumulants(const CumulantSpec& spec, const Pattern& pattern) {
  std::map<std::string, CumulantSpec> specs;
  Pattern relabeled;
  for (const auto& l : pattern) relabeled.push_back({"x", l.sign});
  specs.emplace("x", spec);
  return moments_from_cumulants(specs, relabeled);
}

Rational predicted_block_cumulant(std::size_t r, std::size_t b) {
  if (b == 0) throw DomainError("block count must be positive");
  return rational_pow(Rational(static_cast<long>(b)), 1 - 2 * static_cast<int>(r)) *
         static_cast<long>(beta(r));
}

Rational predicted_transpose_moment(const ncpart::SignString& pattern, std::size_t b) {
  Pattern p;
  for (auto s : pattern) p.push_back({"c", s});
  return moments_from_cumulants(CumulantSpec::transpose(b), p);
}

Rational counterexample_prediction(std::size_t b) {
  if (b < 2) throw DomainError("the swap matrix needs b >= 2");
  return Rational(-4) / rational_pow(Rational(static_cast<long>(b)), 4);
}

namespace {

std::vector<std::size_t> pick(const std::vector<std::size_t>& positions,
                              const std::vector<std::size_t>& block) {
  std::vector<std::size_t> out;
  for (std::size_t s : block) out.push_back(positions[s - 1]);
  return out;
}

}  // namespace

Rational free_moment(const std::vector<std::size_t>& positions, const Functional& kappa) {
  if (positions.empty()) return 1;
  Rational total = 0;
  for (const auto& pi : ncpart::enumerate_nc(positions.size())) {
    Rational term = 1;
    for (const auto& block : pi.blocks()) {
      term *= kappa(pick(positions, block));
      if (term == 0) break;
    }
    total += term;
  }
  return total;
}

Rational free_cumulant(const std::vector<std::size_t>& positions, const Functional& moment) {
  if (positions.empty()) throw DomainError("cumulant of an empty tuple");
  const auto one = ncpart::SetPartition::full(positions.size());
  Rational total = 0;
  for (const auto& pi : ncpart::enumerate_nc(positions.size())) {
    const std::int64_t mu = ncpart::mobius_nc(pi, one);
    if (mu == 0) continue;
    Rational term = static_cast<long>(mu);
    for (const auto& block : pi.blocks()) term *= moment(pick(positions, block));
    total += term;
  }
  return total;
}

Rational block_cumulant(const std::vector<BlockLetter>& letters, std::size_t b) {
  if (b == 0) throw DomainError("block count must be positive");
  const std::size_t m = letters.size();
  for (const auto& l : letters)
    if (l.row < 1 || l.row > b || l.col < 1 || l.col > b)
      throw DomainError("block index outside [b]");
  if (m == 0 || m % 2 != 0) return 0;
  for (std::size_t k = 0; k < m; ++k) {
    const auto& x = letters[k];
    const auto& y = letters[(k + 1) % m];
    if (x.sign == y.sign) return 0;
    if (x.sign == Sign::One ? x.col != y.col : x.row != y.row) return 0;
  }
  return predicted_block_cumulant(m / 2, b);
}

Rational predicted_block_moment(const std::vector<BlockLetter>& letters, std::size_t b) {
  if (letters.empty()) return 1;
  ncpart::SignString eps;
  for (const auto& l : letters) eps.push_back(l.sign);
  Rational total = 0;
  for (const auto& pi : ncpart::enumerate_nc_eps_alt(eps)) {
    Rational term = 1;
    for (const auto& block : pi.blocks()) {
      std::vector<BlockLetter> sub;
      for (std::size_t s : block) sub.push_back(letters[s - 1]);
      term *= block_cumulant(sub, b);
      if (term == 0) break;
    }
    total += term;
  }
  return total;
}

namespace {

// Entry (i, j) of a factor (0-based): either a scalar or one block letter.
struct EntryValue {
  bool is_letter = false;
  Rational scalar = 0;
  BlockLetter letter{};
};

EntryValue factor_entry(const BlockFactor& f, std::size_t i, std::size_t j, std::size_t b) {
  EntryValue e;
  auto letter = [&](std::size_t row, std::size_t col, Sign s) {
    e.is_letter = true;
    e.letter = {row + 1, col + 1, s};
  };
  switch (f.kind) {
    case BlockFactor::Kind::Unitary:
      f.adjoint ? letter(j, i, Sign::Star) : letter(i, j, Sign::One);
      break;
    case BlockFactor::Kind::GridTranspose:
      f.adjoint ? letter(i, j, Sign::Star) : letter(j, i, Sign::One);
      break;
    case BlockFactor::Kind::Component: {
      const std::size_t k = f.component % b;
      if (!f.adjoint && j == (i + k) % b) letter(j, i, Sign::One);
      if (f.adjoint && i == (j + k) % b) letter(i, j, Sign::Star);
      break;
    }
    case BlockFactor::Kind::Scalar:
      e.scalar = f.scalar[i][j];
      break;
  }
  return e;
}

}  // namespace

Rational block_expansion_moment(const std::vector<BlockFactor>& factors, std::size_t b) {
  if (b == 0) throw DomainError("block count must be positive");
  if (factors.empty()) return 1;
  for (const auto& f : factors)
    if (f.kind == BlockFactor::Kind::Scalar &&
        (f.scalar.size() != b ||
         std::any_of(f.scalar.begin(), f.scalar.end(), [b](const auto& r) { return r.size() != b; })))
      throw ContractError("scalar factor is not b x b");

  const std::size_t m = factors.size();
  Rational total = 0;
  std::vector<std::size_t> idx(m + 1, 0);
  std::vector<BlockLetter> word;
  // Depth-first over i_0 .. i_{m-1} with i_m = i_0, pruning zero entries.
  auto rec = [&](auto&& self, std::size_t pos, Rational coeff) -> void {
    if (pos == m) {
      total += coeff * predicted_block_moment(word, b);
      return;
    }
    const auto next_choices = [&]() {
      std::vector<std::size_t> out;
      if (pos + 1 == m) {
        out.push_back(idx[0]);
      } else {
        for (std::size_t j = 0; j < b; ++j) out.push_back(j);
      }
      return out;
    }();
    for (std::size_t j : next_choices) {
      const EntryValue e = factor_entry(factors[pos], idx[pos], j, b);
      idx[pos + 1] = j;
      if (e.is_letter) {
        word.push_back(e.letter);
        self(self, pos + 1, coeff);
        word.pop_back();
      } else if (e.scalar != 0) {
        self(self, pos + 1, coeff * e.scalar);
      }
    }
  };
  for (std::size_t i0 = 0; i0 < b; ++i0) {
    idx[0] = i0;
    rec(rec, 0, Rational(1));
  }
  return total / static_cast<long>(b);
}

std::vector<std::vector<Rational>> top_swap_matrix(std::size_t b) {
  if (b < 2) throw DomainError("the swap matrix needs b >= 2");
  std::vector<std::vector<Rational>> a(b, std::vector<Rational>(b, 0));
  a[0][1] = 1;
  a[1][0] = 1;
  return a;
}

}  // namespace ptlab::moments
