#pragma once

// Expected normalised traces of words in entry-permuted Haar unitaries, exact
// at finite N, plus the free-cumulant predictions for the large-N limit.
//
// Two exact routes that share nothing beyond the Weingarten table:
//   direct  - Collins' formula over index tuples, double sum over S_k x S_k;
//   pairing - sum over opposite-sign pairings (p, q) of Wg_N(p,q) |A(p,q)| / N.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ptlab/ncpart.hpp"
#include "ptlab/perms.hpp"
#include "ptlab/rational.hpp"

namespace ptlab::moments {

using ncpart::Pairing;
using ncpart::SetPartition;
using ncpart::Sign;

struct Letter {
  std::string label;
  perms::EntryPermutation perm;
  Sign exponent = Sign::One;
};

// Cyclic word (U_{label_1}^{perm_1})^{eps_1} ... read under the trace.
class Word {
 public:
  Word(std::vector<Letter> letters, std::size_t dimension);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  std::size_t dimension() const noexcept { return dimension_; }
  std::vector<std::string> labels() const;  // distinct, first-appearance order
  ncpart::SignString signs() const;
  // Same number of 1 and * letters for every label.
  bool is_balanced() const;
  Word rotated(std::size_t shift) const;
  std::string describe() const;  // grammar form

 private:
  std::vector<Letter> letters_;
  std::size_t dimension_;
};

struct ExactOptions {
  // Refuse when N^n exceeds this many index tuples.
  std::uint64_t max_index_tuples = 1'000'000'000;
};

Rational exact_trace_expectation_direct(const Word& word, const ExactOptions& options = {});
Rational exact_trace_expectation_pairing(const Word& word, const ExactOptions& options = {});

// P_2^eps(n) restricted to pairs inside one label.
std::vector<Pairing> admissible_pairings(const Word& word);

// |A^{(p,q)}|: tuples i in [N]^n (j_s = i_{s+1}) with k_s = k_{p(s)}, l_s = l_{q(s)}.
std::uint64_t count_a(const Word& word, const Pairing& p, const Pairing& q,
                      const ExactOptions& options = {});
// F^{(p,q)}(S) for the interval S = {first, ..., first + length - 1} (1-based).
std::uint64_t count_f(const Word& word, const Pairing& p, const Pairing& q, std::size_t first,
                      std::size_t length, const ExactOptions& options = {});
// Product over labels of Wg_N(p|_label, q|_label).
Rational weingarten_weight(const Word& word, const Pairing& p, const Pairing& q);
// V(p,q) = weight * |A| / N.
Rational v_pq(const Word& word, const Pairing& p, const Pairing& q,
              const ExactOptions& options = {});

// ---------------------------------------------------------------------------
// Free cumulant side

// beta_r = (-1)^{r-1} Cat_{r-1}
std::int64_t beta(std::size_t r);

// R-diagonal law: only alternating kappa_{2r} are nonzero.
class CumulantSpec {
 public:
  CumulantSpec(std::string name, std::function<Rational(std::size_t r)> alternating);

  static CumulantSpec haar();                   // beta_r
  static CumulantSpec transpose(std::size_t b);  // b^{2-2r} beta_r
  static CumulantSpec block(std::size_t b);      // b^{1-2r} beta_r

  const std::string& name() const noexcept { return name_; }
  Rational kappa(std::size_t r) const { return alternating_(r); }

 private:
  std::string name_;
  std::function<Rational(std::size_t)> alternating_;
};

struct PatternLetter {
  std::string label;
  Sign sign = Sign::One;
};
using Pattern = std::vector<PatternLetter>;

// Sum over NC_{eps,alt}(n) with single-label blocks of prod kappa_{|V|}.
// Distinct labels are free; every label needs a spec.
Rational moments_from_cumulants(const std::map<std::string, CumulantSpec>& specs,
                                const Pattern& pattern);
Rational moments_from_cumulants(const CumulantSpec& spec, const Pattern& pattern);

Rational predicted_block_cumulant(std::size_t r, std::size_t b);
Rational predicted_transpose_moment(const ncpart::SignString& pattern, std::size_t b);
Rational counterexample_prediction(std::size_t b);

// Generic scalar moment <-> free cumulant conversion on ordered sub-tuples of a
// fixed word. Functionals receive 0-based positions in increasing order.
using Functional = std::function<Rational(const std::vector<std::size_t>& positions)>;
Rational free_moment(const std::vector<std::size_t>& positions, const Functional& kappa);
Rational free_cumulant(const std::vector<std::size_t>& positions, const Functional& moment);

// ---------------------------------------------------------------------------
// Limit law of the blocks v_ij of a Haar unitary cut into a b x b grid.

struct BlockLetter {
  std::size_t row;  // 1-based block indices
  std::size_t col;
  Sign sign = Sign::One;
};

// kappa_m of block letters: b^{1-m} beta_{m/2} when the letters alternate and
// chain (v_{ij} then v*_{kj}: same column; v*_{ij} then v_{il}: same row, cyclically).
Rational block_cumulant(const std::vector<BlockLetter>& letters, std::size_t b);
// phi of a word in the blocks, via the NC_{eps,alt} expansion of block_cumulant.
Rational predicted_block_moment(const std::vector<BlockLetter>& letters, std::size_t b);

// Factors of a word in M_b(A): the Haar unitary v, its grid transpose, the
// diagonal components v_k, or a scalar b x b matrix.
struct BlockFactor {
  enum class Kind { Unitary, GridTranspose, Component, Scalar };
  Kind kind = Kind::Unitary;
  bool adjoint = false;
  std::size_t component = 0;                  // Kind::Component
  std::vector<std::vector<Rational>> scalar;  // Kind::Scalar, b x b

  static BlockFactor unitary(bool adjoint = false) { return {Kind::Unitary, adjoint, 0, {}}; }
  static BlockFactor grid_transpose(bool adjoint = false) {
    return {Kind::GridTranspose, adjoint, 0, {}};
  }
  static BlockFactor diagonal_component(std::size_t k, bool adjoint = false) {
    return {Kind::Component, adjoint, k, {}};
  }
  static BlockFactor matrix(std::vector<std::vector<Rational>> entries) {
    return {Kind::Scalar, false, 0, std::move(entries)};
  }
};

// Phi(X_1 ... X_m) = (1/b) sum over index cycles of scalar entries times phi of
// the block word; the predicted limit of (1/N) Tr at N = b d, d -> infinity.
Rational block_expansion_moment(const std::vector<BlockFactor>& factors, std::size_t b);

// b x b matrix swapping the first two basis vectors, zero elsewhere.
std::vector<std::vector<Rational>> top_swap_matrix(std::size_t b);

}  // namespace ptlab::moments
