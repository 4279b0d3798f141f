#include "ptlab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "ptlab/errors.hpp"
#include "ptlab/freeness.hpp"
#include "ptlab/moments.hpp"
#include "ptlab/sampler.hpp"

namespace ptlab::experiments {

using moments::BlockFactor;
using moments::BlockLetter;
using ncpart::Sign;
using sampler::EstimatorResult;

namespace {

constexpr double kAbsoluteFloor = 1e-9;

Measurement mc_row(std::string quantity, const Rational& prediction, const EstimatorResult& r,
                   double band) {
  Measurement m;
  m.quantity = std::move(quantity);
  m.kind = "mc";
  m.prediction_exact = to_string(prediction);
  m.prediction = to_double(prediction);
  m.measured = r.mean;
  m.std_error = r.std_error;
  m.pass = std::abs(r.mean - m.prediction) <= band * r.std_error + kAbsoluteFloor;
  return m;
}

Measurement exact_row(std::string quantity, const Rational& prediction, const Rational& value) {
  Measurement m;
  m.quantity = std::move(quantity);
  m.kind = "exact";
  m.prediction_exact = to_string(prediction);
  m.prediction = to_double(prediction);
  m.measured = to_double(value);
  m.pass = prediction == value;
  m.note = to_string(value);
  return m;
}

sampler::EstimateOptions options(const ExperimentConfig& c) {
  sampler::EstimateOptions o;
  o.threads = c.threads;
  return o;
}

void require_shape(const ExperimentConfig& c, std::size_t min_b) {
  if (c.b < min_b) throw DomainError("this experiment needs b >= " + std::to_string(min_b));
  if (c.d == 0) throw DomainError("d must be positive");
}

// tr((X X*)^k) for X = U^{G(-1,b,d)}, k = 1..3.
void thm16(const ExperimentConfig& c, ExperimentReport& rep) {
  require_shape(c, 1);
  const perms::BlockShape shape(c.b, c.d);
  const auto gamma = perms::EntryPermutation::partial_transpose(shape, perms::Side::Left);
  const auto results = sampler::estimate(
      1, shape.m(), c.samples, c.seed, 3,
      [&](const std::vector<CMatrix>& u, const simd::KernelSet& k) {
        const CMatrix x = sampler::apply_entry_permutation(u[0], gamma);
        const CMatrix p = multiply(x, adjoint(x), k);
        const CMatrix p2 = multiply(p, p, k);
        const double n = static_cast<double>(shape.m());
        return std::vector<std::complex<double>>{trace(p) / n, trace_product(p, p, k) / n,
                                                 trace_product(p2, p, k) / n};
      },
      options(c));
  for (std::size_t k = 1; k <= 3; ++k) {
    ncpart::SignString eps;
    for (std::size_t r = 0; r < k; ++r) {
      eps.push_back(Sign::One);
      eps.push_back(Sign::Star);
    }
    rep.rows.push_back(mc_row("tr((XX*)^" + std::to_string(k) + ")",
                              moments::predicted_transpose_moment(eps, c.b), results[k - 1],
                              c.tolerance_se));
  }
  rep.notes.push_back("X = U^G(-1," + std::to_string(c.b) + "," + std::to_string(c.d) +
                      "); prediction from kappa_2r = b^(2-2r) beta_r");
}

// (1/N) Tr(v^t A (v^t)* A v^t A (v^t)* A), A = top swap (x) I_d.
void counterexample(const ExperimentConfig& c, ExperimentReport& rep) {
  require_shape(c, 2);
  const perms::BlockShape shape(c.b, c.d);
  const std::size_t n = shape.m(), d = c.d;
  const auto gamma = perms::EntryPermutation::partial_transpose(shape, perms::Side::Left);
  const auto results = sampler::estimate(
      1, n, c.samples, c.seed, 1,
      [&](const std::vector<CMatrix>& u, const simd::KernelSet& k) {
        const CMatrix x = sampler::apply_entry_permutation(u[0], gamma);
        // X A keeps block columns 1, 2 swapped; only 2d columns survive, so
        // X A X* = W R with W = (X A)[:, :2d] and R = rows 0..2d of X* permuted.
        CMatrix w(n, 2 * d), r(2 * d, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < 2 * d; ++j) {
            const std::size_t src = j < d ? j + d : j - d;
            w.set(i, j, x.at(i, src));
            r.set(j, i, std::conj(x.at(i, j)));
          }
        const CMatrix z = multiply(w, r, k);  // X A X*
        CMatrix za(n, n);                     // X A X* A
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < 2 * d; ++j) za.set(i, j < d ? j + d : j - d, z.at(i, j));
        return std::vector<std::complex<double>>{trace_product(za, za, k) /
                                                 static_cast<double>(n)};
      },
      options(c));
  rep.rows.push_back(mc_row("Phi(v^t A (v^t)* A v^t A (v^t)* A)",
                            moments::counterexample_prediction(c.b), results[0], c.tolerance_se));

  const auto a = moments::top_swap_matrix(c.b);
  const std::vector<BlockFactor> word{BlockFactor::grid_transpose(), BlockFactor::matrix(a),
                                      BlockFactor::grid_transpose(true), BlockFactor::matrix(a),
                                      BlockFactor::grid_transpose(), BlockFactor::matrix(a),
                                      BlockFactor::grid_transpose(true), BlockFactor::matrix(a)};
  rep.rows.push_back(exact_row("block expansion of the same word",
                               moments::counterexample_prediction(c.b),
                               moments::block_expansion_moment(word, c.b)));
}

// phi = (1/d) Tr on blocks U_ij of a Haar unitary.
void blocks(const ExperimentConfig& c, ExperimentReport& rep) {
  require_shape(c, 2);
  const perms::BlockShape shape(c.b, c.d);
  const std::size_t d = c.d;
  const auto results = sampler::estimate(
      1, shape.m(), c.samples, c.seed, 3,
      [&](const std::vector<CMatrix>& u, const simd::KernelSet& k) {
        CMatrix u11(d, d), u12(d, d);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) {
            u11.set(i, j, u[0].at(i, j));
            u12.set(i, j, u[0].at(i, d + j));
          }
        const CMatrix p11 = multiply(u11, adjoint(u11), k);
        const CMatrix p12 = multiply(u12, adjoint(u12), k);
        const double dd = static_cast<double>(d);
        return std::vector<std::complex<double>>{trace(p11) / dd, trace_product(p11, p11, k) / dd,
                                                 trace_product(p12, p11, k) / dd};
      },
      options(c));
  const BlockLetter a{1, 1, Sign::One}, as{1, 1, Sign::Star};
  const BlockLetter e{1, 2, Sign::One}, es{1, 2, Sign::Star};
  rep.rows.push_back(mc_row("phi(U11 U11*)", moments::predicted_block_moment({a, as}, c.b),
                            results[0], c.tolerance_se));
  rep.rows.push_back(mc_row("phi(U11 U11* U11 U11*)",
                            moments::predicted_block_moment({a, as, a, as}, c.b), results[1],
                            c.tolerance_se));
  rep.rows.push_back(mc_row("phi(U12 U12* U11 U11*)",
                            moments::predicted_block_moment({e, es, a, as}, c.b), results[2],
                            c.tolerance_se));
}

freeness::TransposeSpec spec(perms::Side theta, freeness::SizeExpr b, freeness::SizeExpr d) {
  freeness::TransposeSpec s;
  s.theta = theta;
  s.b = std::move(b);
  s.d = std::move(d);
  return s;
}

// Exact fractions strictly decreasing along the grid.
bool strictly_decreasing(const freeness::PairVerdict& v) {
  for (std::size_t k = 1; k < v.fractions.size(); ++k)
    if (!(v.fractions[k].second < v.fractions[k - 1].second)) return false;
  return v.fractions.size() >= 2;
}

void add_pair_rows(const freeness::PairVerdict& v, ExperimentReport& rep) {
  Measurement verdict;
  verdict.quantity = "clause verdict " + v.pair;
  verdict.kind = "exact";
  verdict.prediction_exact = "free";
  verdict.note = v.clause.clause + ": " + freeness::to_string(v.clause.verdict) +
                 (v.clause.heuristic ? " (heuristic)" : "");
  verdict.pass = v.clause.verdict == freeness::Verdict::Free;
  verdict.measured = verdict.pass ? 1.0 : 0.0;
  verdict.prediction = 1.0;
  rep.rows.push_back(verdict);

  Measurement trend;
  trend.quantity = "fractions decrease " + v.pair;
  trend.kind = "exact";
  trend.prediction_exact = "strictly decreasing";
  for (const auto& [n, f] : v.fractions) trend.note += (trend.note.empty() ? "" : " ") +
                                                       std::to_string(n) + ":" + to_string(f);
  trend.pass = strictly_decreasing(v);
  trend.measured = v.fractions.empty() ? 0.0 : to_double(v.fractions.back().second);
  rep.rows.push_back(trend);
  for (const auto& diag : v.diagnostics) rep.notes.push_back("diagnostic: " + diag);
}

std::vector<std::size_t> default_grid(const ExperimentConfig& c, std::vector<std::size_t> fallback) {
  return c.grid.empty() ? fallback : c.grid;
}

// G(1,b,N/b) versus its transpose G(-1,b,N/b).
void cor26(const ExperimentConfig& c, ExperimentReport& rep) {
  require_shape(c, 1);
  const auto grid = default_grid(c, {8, 16, 32, 64});
  const auto s1 = spec(perms::Side::Right, freeness::SizeExpr::constant(c.b),
                       freeness::SizeExpr::complement());
  const auto s2 = spec(perms::Side::Left, freeness::SizeExpr::constant(c.b),
                       freeness::SizeExpr::complement());
  add_pair_rows(freeness::predict_pair(s1, s2, grid), rep);

  // Finite-N check of the witness: E tr(X Y*) equals the exact fraction.
  if (c.samples > 0) {
    const perms::BlockShape shape(c.b, c.d);
    const std::size_t n = shape.m();
    const auto g1 = s1.at(n), g2 = s2.at(n);
    const auto r = sampler::estimate(
        1, n, c.samples, c.seed, 1,
        [&](const std::vector<CMatrix>& u, const simd::KernelSet& k) {
          const CMatrix x = sampler::apply_entry_permutation(u[0], g1);
          const CMatrix y = sampler::apply_entry_permutation(u[0], g2);
          return std::vector<std::complex<double>>{trace_product(x, adjoint(y), k) /
                                                   static_cast<double>(n)};
        },
        options(c));
    rep.rows.push_back(mc_row("E tr(X Y*) at N=" + std::to_string(n),
                              freeness::nonfreeness_witness(s1, s2, n), r[0], c.tolerance_se));
  }
}

// {U, U^T, U^G(1,b,d), U^G(-1,b,d)} with b = d = sqrt(N).
void cor27(const ExperimentConfig& c, ExperimentReport& rep) {
  const auto grid = default_grid(c, {16, 64, 256, 1024});
  const std::vector<freeness::TransposeSpec> family{
      spec(perms::Side::Left, freeness::SizeExpr::constant(1), freeness::SizeExpr::complement()),
      spec(perms::Side::Right, freeness::SizeExpr::constant(1), freeness::SizeExpr::complement()),
      spec(perms::Side::Right, freeness::SizeExpr::power(0.5), freeness::SizeExpr::complement()),
      spec(perms::Side::Left, freeness::SizeExpr::power(0.5), freeness::SizeExpr::complement())};
  const auto f = freeness::predict_family(family, grid);
  for (const auto& v : f.pairs) add_pair_rows(v, rep);
  rep.notes.push_back("family verdict: " + freeness::to_string(f.verdict));
}

// Components v_0 .. v_{b-1} of the grid transpose as N x N matrices.
void diagfree(const ExperimentConfig& c, ExperimentReport& rep) {
  require_shape(c, 3);
  const perms::BlockShape shape(c.b, c.d);
  const std::size_t n = shape.m();

  struct Probe {
    std::string name;
    std::vector<std::pair<std::size_t, bool>> letters;  // (component, adjoint)
  };
  const std::vector<Probe> probes{
      {"v0 v0*", {{0, false}, {0, true}}},
      {"v1 v1* v1 v1*", {{1, false}, {1, true}, {1, false}, {1, true}}},
      {"v0 v0* v1 v1*", {{0, false}, {0, true}, {1, false}, {1, true}}},
      {"v1 v2 v1* v2*", {{1, false}, {2, false}, {1, true}, {2, true}}},
      {"v0 v1* v1 v0* v2 v2*", {{0, false}, {1, true}, {1, false}, {0, true}, {2, false}, {2, true}}},
      {"v1 v1* v2 v2* v1 v1* v2 v2*",
       {{1, false}, {1, true}, {2, false}, {2, true}, {1, false}, {1, true}, {2, false}, {2, true}}},
  };

  const auto results = sampler::estimate(
      1, n, c.samples, c.seed, probes.size(),
      [&](const std::vector<CMatrix>& u, const simd::KernelSet& k) {
        std::vector<CMatrix> comps, comps_adj;
        for (std::size_t j = 0; j < c.b; ++j) {
          comps.push_back(sampler::diagonal_decomposition(u[0], shape, j));
          comps_adj.push_back(adjoint(comps.back()));
        }
        std::vector<std::complex<double>> out;
        for (const auto& p : probes) {
          auto factor = [&](std::size_t s) -> const CMatrix& {
            return p.letters[s].second ? comps_adj[p.letters[s].first] : comps[p.letters[s].first];
          };
          CMatrix left = factor(0);
          for (std::size_t s = 1; s + 1 < p.letters.size(); ++s) left = multiply(left, factor(s), k);
          out.push_back(trace_product(left, factor(p.letters.size() - 1), k) /
                        static_cast<double>(n));
        }
        return out;
      },
      options(c));

  std::map<std::string, moments::CumulantSpec> specs;
  for (std::size_t j = 0; j < c.b; ++j)
    specs.emplace("v" + std::to_string(j), moments::CumulantSpec::block(c.b));
  for (std::size_t q = 0; q < probes.size(); ++q) {
    moments::Pattern pattern;
    std::vector<BlockFactor> factors;
    for (const auto& [comp, adj] : probes[q].letters) {
      pattern.push_back({"v" + std::to_string(comp), adj ? Sign::Star : Sign::One});
      factors.push_back(BlockFactor::diagonal_component(comp, adj));
    }
    const Rational free_prediction = moments::moments_from_cumulants(specs, pattern);
    Measurement m = mc_row("Phi(" + probes[q].name + ")", free_prediction, results[q],
                           c.tolerance_se);
    const Rational expansion = moments::block_expansion_moment(factors, c.b);
    m.note = "block expansion " + to_string(expansion) +
             (expansion == free_prediction ? " (agrees)" : " (DIFFERS)");
    m.pass = m.pass && expansion == free_prediction;
    rep.rows.push_back(std::move(m));
  }
}

}  // namespace

std::vector<std::string> experiment_names() {
  return {"thm16", "counterexample", "blocks", "cor26", "cor27", "diagfree"};
}

bool is_experiment(const std::string& name) {
  const auto names = experiment_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

ExperimentConfig default_config(const std::string& name) {
  if (!is_experiment(name)) throw DomainError("unknown experiment '" + name + "'");
  ExperimentConfig c;
  if (name == "diagfree") {
    c.b = 3;
    c.d = 32;
    c.samples = 4000;
  } else if (name == "cor26") {
    c.d = 32;
    c.samples = 2000;
  } else if (name == "cor27") {
    c.samples = 0;
  }
  return c;
}

ExperimentReport run_experiment(const std::string& name, const ExperimentConfig& config) {
  if (!is_experiment(name)) throw DomainError("unknown experiment '" + name + "'");
  ExperimentReport rep;
  rep.name = name;
  rep.config = config;
  const auto start = std::chrono::steady_clock::now();
  if (name == "thm16") thm16(config, rep);
  if (name == "counterexample") counterexample(config, rep);
  if (name == "blocks") blocks(config, rep);
  if (name == "cor26") cor26(config, rep);
  if (name == "cor27") cor27(config, rep);
  if (name == "diagfree") diagfree(config, rep);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rep.pass = !rep.rows.empty() &&
             std::all_of(rep.rows.begin(), rep.rows.end(), [](const Measurement& m) { return m.pass; });
  return rep;
}

report::Config echo(const ExperimentReport& r) {
  const auto& c = r.config;
  std::string grid;
  for (auto n : c.grid) grid += (grid.empty() ? "" : ",") + std::to_string(n);
  return {{"command", "reproduce"},
          {"experiment", r.name},
          {"b", std::to_string(c.b)},
          {"d", std::to_string(c.d)},
          {"samples", std::to_string(c.samples)},
          {"seed", std::to_string(c.seed)},
          {"tolerance_se", report::format_double(c.tolerance_se)},
          {"grid", grid}};
}

report::Row csv_header() {
  return {"experiment", "quantity", "kind",    "prediction", "prediction_exact",
          "measured_re", "measured_im", "std_error", "pass", "note"};
}

std::vector<report::Row> csv_rows(const ExperimentReport& r) {
  std::vector<report::Row> rows;
  for (const auto& m : r.rows)
    rows.push_back({r.name, m.quantity, m.kind, report::format_double(m.prediction),
                    m.prediction_exact, report::format_double(m.measured.real()),
                    report::format_double(m.measured.imag()), report::format_double(m.std_error),
                    m.pass ? "true" : "false", m.note});
  return rows;
}

nlohmann::json to_json(const ExperimentReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& m : r.rows)
    rows.push_back({{"quantity", m.quantity},
                    {"kind", m.kind},
                    {"prediction", m.prediction},
                    {"prediction_exact", m.prediction_exact},
                    {"measured_re", m.measured.real()},
                    {"measured_im", m.measured.imag()},
                    {"std_error", m.std_error},
                    {"pass", m.pass},
                    {"note", m.note}});
  return {{"experiment", r.name}, {"pass", r.pass}, {"seconds", r.seconds},
          {"rows", rows},         {"notes", r.notes}};
}

}  // namespace ptlab::experiments
