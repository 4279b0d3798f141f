#include "ptlab/freeness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ptlab/errors.hpp"

namespace ptlab::freeness {

SizeExpr SizeExpr::constant(std::size_t value) {
  if (value == 0) throw DomainError("size constant must be positive");
  SizeExpr e;
  e.kind_ = Kind::Constant;
  e.value_ = value;
  return e;
}

SizeExpr SizeExpr::divide(std::size_t k) {
  if (k == 0) throw DomainError("N/k needs k >= 1");
  SizeExpr e;
  e.kind_ = Kind::Divide;
  e.value_ = k;
  return e;
}

SizeExpr SizeExpr::power(double alpha) {
  if (!(alpha >= 0 && alpha <= 1)) throw DomainError("N^alpha needs 0 <= alpha <= 1");
  SizeExpr e;
  e.kind_ = Kind::Power;
  e.alpha_ = alpha;
  return e;
}

SizeExpr SizeExpr::complement() {
  SizeExpr e;
  e.kind_ = Kind::Complement;
  return e;
}

SizeExpr SizeExpr::table(std::map<std::size_t, std::size_t> values) {
  if (values.empty()) throw DomainError("empty size table");
  SizeExpr e;
  e.kind_ = Kind::Table;
  e.table_ = std::move(values);
  return e;
}

namespace {

std::size_t nearest_divisor(std::size_t n, double target) {
  std::size_t best = 1;
  double best_gap = std::fabs(target - 1.0);
  auto consider = [&](std::size_t x) {
    const double gap = std::fabs(target - static_cast<double>(x));
    if (gap < best_gap || (gap == best_gap && x < best)) {
      best = x;
      best_gap = gap;
    }
  };
  for (std::size_t x = 1; x * x <= n; ++x)
    if (n % x == 0) {
      consider(x);
      consider(n / x);
    }
  return best;
}

std::string format_double(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

std::size_t SizeExpr::evaluate(std::size_t n) const {
  if (n == 0) throw DomainError("size sequences start at N = 1");
  std::size_t v = 0;
  switch (kind_) {
    case Kind::Constant:
      v = value_;
      break;
    case Kind::Divide:
      if (n % value_ != 0)
        throw ContractError("N/" + std::to_string(value_) + " is not an integer at N = " +
                            std::to_string(n));
      v = n / value_;
      break;
    case Kind::Power:
      v = nearest_divisor(n, std::pow(static_cast<double>(n), alpha_));
      break;
    case Kind::Complement:
      throw ContractError("a complement size needs the other dimension");
    case Kind::Table: {
      const auto it = table_.find(n);
      if (it == table_.end())
        throw ContractError("size table has no entry for N = " + std::to_string(n));
      v = it->second;
      break;
    }
  }
  if (n % v != 0)
    throw ContractError(describe() + " = " + std::to_string(v) + " does not divide N = " +
                        std::to_string(n));
  return v;
}

std::string SizeExpr::describe() const {
  switch (kind_) {
    case Kind::Constant:
      return std::to_string(value_);
    case Kind::Divide:
      return value_ == 1 ? "N" : "N/" + std::to_string(value_);
    case Kind::Power:
      return "N^" + format_double(alpha_);
    case Kind::Complement:
      return "";
    case Kind::Table: {
      std::string s = "{";
      for (const auto& [n, v] : table_) {
        if (s.size() > 1) s += ";";
        s += std::to_string(n) + ":" + std::to_string(v);
      }
      return s + "}";
    }
  }
  return "";
}

perms::BlockShape TransposeSpec::shape_at(std::size_t n) const {
  const bool b_free = b.kind() == SizeExpr::Kind::Complement;
  const bool d_free = d.kind() == SizeExpr::Kind::Complement;
  if (b_free && d_free) throw ContractError("spec leaves both b and d open");
  std::size_t bv, dv;
  if (b_free) {
    dv = d.evaluate(n);
    bv = n / dv;
  } else if (d_free) {
    bv = b.evaluate(n);
    dv = n / bv;
  } else {
    bv = b.evaluate(n);
    dv = d.evaluate(n);
  }
  if (bv * dv != n)
    throw ContractError("spec " + describe() + " gives b*d = " + std::to_string(bv * dv) +
                        " at N = " + std::to_string(n));
  return perms::BlockShape(bv, dv);
}

perms::EntryPermutation TransposeSpec::at(std::size_t n) const {
  return perms::EntryPermutation::partial_transpose(shape_at(n), theta);
}

std::string TransposeSpec::describe() const {
  std::string s = std::string("t=") + (theta == perms::Side::Right ? "1" : "-1");
  if (b.kind() != SizeExpr::Kind::Complement) s += ",b=" + b.describe();
  if (d.kind() != SizeExpr::Kind::Complement) s += ",d=" + d.describe();
  return s;
}

Rational condition19_fraction(const TransposeSpec& a, const TransposeSpec& b, std::size_t n) {
  const auto pa = a.at(n), pb = b.at(n);
  const std::uint64_t fixed = perms::fixed_point_count(pa, pb);
  Rational r(BigInt(static_cast<unsigned long>(fixed)),
             BigInt(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n));
  r.canonicalize();
  return r;
}

Rational nonfreeness_witness(const TransposeSpec& a, const TransposeSpec& b, std::size_t n) {
  return condition19_fraction(a, b, n);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Free:
      return "free";
    case Verdict::NotFree:
      return "not_free";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "";
}

namespace {

// Asymptotic class of a size sequence: c * N^exponent, up to divisor rounding.
struct Growth {
  enum class Form { Bounded, Linear, Power, ComplementPower, Unknown };
  Form form = Form::Unknown;
  double exponent = 0;
  std::size_t parameter = 0;  // Bounded: value; Linear: k in N/k
  double alpha = 0;           // Power / ComplementPower
};

Growth own_growth(const SizeExpr& e) {
  Growth g;
  switch (e.kind()) {
    case SizeExpr::Kind::Constant:
      g = {Growth::Form::Bounded, 0, e.constant_value(), 0};
      break;
    case SizeExpr::Kind::Divide:
      g = {Growth::Form::Linear, 1, e.divisor(), 0};
      break;
    case SizeExpr::Kind::Power:
      if (e.exponent() == 0)
        g = {Growth::Form::Bounded, 0, 1, 0};
      else if (e.exponent() == 1)
        g = {Growth::Form::Linear, 1, 1, 0};
      else
        g = {Growth::Form::Power, e.exponent(), 0, e.exponent()};
      break;
    default:
      break;
  }
  return g;
}

std::pair<Growth, Growth> growth(const TransposeSpec& s) {
  Growth gb = own_growth(s.b), gd = own_growth(s.d);
  auto complement_of = [](const Growth& other) {
    switch (other.form) {
      case Growth::Form::Bounded:
        return Growth{Growth::Form::Linear, 1, other.parameter, 0};
      case Growth::Form::Linear:
        return Growth{Growth::Form::Bounded, 0, other.parameter, 0};
      case Growth::Form::Power:
        return Growth{Growth::Form::ComplementPower, 1 - other.alpha, 0, other.alpha};
      default:
        return Growth{};
    }
  };
  if (s.b.kind() == SizeExpr::Kind::Complement) gb = complement_of(gd);
  if (s.d.kind() == SizeExpr::Kind::Complement) gd = complement_of(gb);
  return {gb, gd};
}

bool same(double x, double y) { return std::fabs(x - y) < 1e-12; }

enum class Limit { Diverges, Bounded, Unknown, NeedsSampling };

// Does lcm(x, y) / min(x, y) diverge?
Limit ratio_limit(const Growth& x, const Growth& y) {
  using F = Growth::Form;
  if (x.form == F::Unknown || y.form == F::Unknown) return Limit::Unknown;
  if (!same(x.exponent, y.exponent)) return Limit::Diverges;
  if (x.form == y.form) {
    switch (x.form) {
      case F::Bounded:
      case F::Linear:  // lcm(N/k, N/k') / min = max(k,k') / gcd(k,k')
        return Limit::Bounded;
      case F::Power:
      case F::ComplementPower:
        return same(x.alpha, y.alpha) ? Limit::Bounded : Limit::NeedsSampling;
      default:
        return Limit::Unknown;
    }
  }
  return Limit::NeedsSampling;
}

Limit product_limit(const Growth& x, const Growth& y) {
  if (x.form == Growth::Form::Unknown || y.form == Growth::Form::Unknown) return Limit::Unknown;
  return x.exponent + y.exponent > 1e-12 ? Limit::Diverges : Limit::Bounded;
}

// Geometric grid used when the closed forms alone do not settle a limit.
std::vector<std::size_t> sampling_grid() {
  std::vector<std::size_t> g;
  for (std::size_t e = 4; e <= 24; ++e) g.push_back(std::size_t{1} << e);
  return g;
}

// Monotone-divergence heuristic: non-decreasing along the grid and growing by
// more than the grid's first value overall.
Limit sampled_ratio(const TransposeSpec& a, const TransposeSpec& b, bool use_b) {
  std::vector<double> values;
  for (std::size_t n : sampling_grid()) {
    const auto sa = a.shape_at(n), sb = b.shape_at(n);
    const std::size_t x = use_b ? sa.b() : sa.d(), y = use_b ? sb.b() : sb.d();
    values.push_back(static_cast<double>(std::lcm(x, y)) / static_cast<double>(std::min(x, y)));
  }
  const bool monotone = std::is_sorted(values.begin(), values.end());
  return monotone && values.back() > 4 * values.front() ? Limit::Diverges : Limit::Bounded;
}

}  // namespace

ClauseResult lemma_equivalent_predicate(const TransposeSpec& a, const TransposeSpec& b) {
  ClauseResult r;
  const auto [ab, ad] = growth(a);
  const auto [bb, bd] = growth(b);
  std::vector<Limit> limits;
  if (a.theta == b.theta) {
    r.clause = "lemma_i";
    const Limit lb = ratio_limit(ab, bb), ld = ratio_limit(ad, bd);
    limits = {lb, ld};
    try {
      if (lb == Limit::NeedsSampling) {
        limits[0] = sampled_ratio(a, b, true);
        r.heuristic = true;
      }
      if (ld == Limit::NeedsSampling) {
        limits[1] = sampled_ratio(a, b, false);
        r.heuristic = true;
      }
    } catch (const ContractError& e) {
      limits = {Limit::Unknown};
      r.detail = std::string("sampling failed: ") + e.what();
    }
    if (r.detail.empty())
      r.detail = "lcm/min of b and of d must both diverge";
  } else {
    r.clause = "lemma_ii";
    limits = {product_limit(ab, bd), product_limit(bb, ad)};
    r.detail = "b * d' and b' * d must both diverge";
  }
  if (std::find(limits.begin(), limits.end(), Limit::Unknown) != limits.end())
    r.verdict = Verdict::Inconclusive;
  else if (std::all_of(limits.begin(), limits.end(), [](Limit l) { return l == Limit::Diverges; }))
    r.verdict = Verdict::Free;
  else
    r.verdict = Verdict::NotFree;
  if (r.verdict == Verdict::Inconclusive && r.detail.find("sampling") == std::string::npos)
    r.detail = "a size sequence is only tabulated; its limit is not determined";
  if (r.heuristic) r.detail += " (decided by sampling N = 2^4..2^24)";
  return r;
}

PairVerdict predict_pair(const TransposeSpec& a, const TransposeSpec& b,
                         const std::vector<std::size_t>& grid) {
  PairVerdict v;
  v.pair = a.describe() + " | " + b.describe();
  v.clause = lemma_equivalent_predicate(a, b);
  std::vector<std::size_t> sorted(grid);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t n : sorted) v.fractions.emplace_back(n, condition19_fraction(a, b, n));

  if (v.fractions.size() >= 2) {
    bool decreasing = true;
    for (std::size_t k = 1; k < v.fractions.size(); ++k)
      decreasing = decreasing && v.fractions[k].second < v.fractions[k - 1].second;
    if (v.clause.verdict == Verdict::Free && !decreasing)
      v.diagnostics.push_back(
          "clause predicts freeness but the fractions do not decrease along the grid");
    if (v.clause.verdict == Verdict::NotFree && decreasing && v.fractions.size() >= 3)
      v.diagnostics.push_back(
          "clause predicts non-freeness but the fractions decrease along the grid");
  }
  return v;
}

FamilyVerdict predict_family(const std::vector<TransposeSpec>& specs,
                             const std::vector<std::size_t>& grid) {
  if (specs.size() < 2) throw ContractError("a family needs at least two specs");
  FamilyVerdict f;
  bool any_unknown = false, any_not_free = false;
  for (std::size_t s = 0; s < specs.size(); ++s)
    for (std::size_t t = s + 1; t < specs.size(); ++t) {
      PairVerdict v = predict_pair(specs[s], specs[t], grid);
      v.first = s;
      v.second = t;
      any_unknown = any_unknown || v.clause.verdict == Verdict::Inconclusive;
      any_not_free = any_not_free || v.clause.verdict == Verdict::NotFree;
      f.pairs.push_back(std::move(v));
    }
  f.verdict = any_not_free ? Verdict::NotFree : any_unknown ? Verdict::Inconclusive : Verdict::Free;
  return f;
}

}  // namespace ptlab::freeness
