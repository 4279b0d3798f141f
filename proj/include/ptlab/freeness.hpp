#pragma once

// Asymptotic freeness of pairs (and families) of partial transposes of one
// Haar unitary: exact agreement fractions at finite size, and the limit
// criteria on the block-size sequences.
//
// Sequences are indexed by the matrix size: for a grid point N the matrices
// are N x N, so b(N) * d(N) = N for every spec.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptlab/perms.hpp"
#include "ptlab/rational.hpp"

namespace ptlab::freeness {

class SizeExpr {
 public:
  enum class Kind { Constant, Divide, Power, Complement, Table };

  static SizeExpr constant(std::size_t value);
  static SizeExpr divide(std::size_t k);  // N / k; divide(1) is N itself
  static SizeExpr power(double alpha);    // divisor of N nearest to N^alpha, ties to the smaller
  static SizeExpr complement();           // N divided by the other dimension of the spec
  static SizeExpr table(std::map<std::size_t, std::size_t> values);

  Kind kind() const noexcept { return kind_; }
  std::size_t constant_value() const noexcept { return value_; }
  std::size_t divisor() const noexcept { return value_; }
  double exponent() const noexcept { return alpha_; }
  const std::map<std::size_t, std::size_t>& table_values() const noexcept { return table_; }

  // Not defined for Complement; throws ContractError when the value does not divide N.
  std::size_t evaluate(std::size_t n) const;
  std::string describe() const;

 private:
  Kind kind_ = Kind::Constant;
  std::size_t value_ = 1;
  double alpha_ = 0;
  std::map<std::size_t, std::size_t> table_;
};

struct TransposeSpec {
  perms::Side theta = perms::Side::Right;
  SizeExpr b = SizeExpr::constant(1);
  SizeExpr d = SizeExpr::complement();

  perms::BlockShape shape_at(std::size_t n) const;
  perms::EntryPermutation at(std::size_t n) const;
  std::string describe() const;  // grammar form
};

// fixed_point_count / N^2 for the two maps at size N.
Rational condition19_fraction(const TransposeSpec& a, const TransposeSpec& b, std::size_t n);
// The predicted limit of E tr(X Y*) for the pair: the same fraction.
Rational nonfreeness_witness(const TransposeSpec& a, const TransposeSpec& b, std::size_t n);

enum class Verdict { Free, NotFree, Inconclusive };
std::string to_string(Verdict v);

struct ClauseResult {
  std::string clause;  // "lemma_i" (same theta) or "lemma_ii" (mixed)
  Verdict verdict = Verdict::Inconclusive;
  bool heuristic = false;
  std::string detail;
};

ClauseResult lemma_equivalent_predicate(const TransposeSpec& a, const TransposeSpec& b);

struct PairVerdict {
  std::size_t first = 0;  // indices into the family
  std::size_t second = 0;
  std::string pair;
  ClauseResult clause;
  std::vector<std::pair<std::size_t, Rational>> fractions;  // (N, fraction)
  std::vector<std::string> diagnostics;
};

struct FamilyVerdict {
  std::vector<PairVerdict> pairs;
  Verdict verdict = Verdict::Inconclusive;  // conjunction over pairs
};

PairVerdict predict_pair(const TransposeSpec& a, const TransposeSpec& b,
                         const std::vector<std::size_t>& grid);
FamilyVerdict predict_family(const std::vector<TransposeSpec>& specs,
                             const std::vector<std::size_t>& grid);

}  // namespace ptlab::freeness
