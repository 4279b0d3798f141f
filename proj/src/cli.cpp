#include "ptlab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "ptlab/errors.hpp"
#include "ptlab/experiments.hpp"
#include "ptlab/freeness.hpp"
#include "ptlab/grammar.hpp"
#include "ptlab/moments.hpp"
#include "ptlab/report.hpp"
#include "ptlab/sampler.hpp"
#include "ptlab/weingarten.hpp"

namespace ptlab::cli {

namespace {

struct Common {
  std::string out_path;
  std::string format = "csv";
  std::size_t threads = 0;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out_path, "Write output to this file instead of stdout");
  sub->add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--threads", c.threads, "Worker threads (0: all cores)");
}

// Writes to --out when given, else to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw DomainError("cannot open output file " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string rational_field(const Rational& r) { return to_string(r); }

report::Config with_common(report::Config c, const Common& common) {
  c.emplace_back("format", common.format);
  return c;
}

int cmd_wg(std::size_t n, long big_n, const Common& common, std::ostream& out) {
  const auto table = weingarten::compute_table(n, big_n);
  const auto config = with_common(
      {{"command", "wg"}, {"n", std::to_string(n)}, {"N", std::to_string(big_n)}}, common);
  Sink sink(common.out_path, out);
  if (common.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t k = 0; k < table.classes().size(); ++k)
      rows.push_back({{"cycle_type", table.classes()[k].to_string()},
                      {"numerator", table.values()[k].get_num().get_str()},
                      {"denominator", table.values()[k].get_den().get_str()}});
    *sink << report::document(config, "table", rows).dump(2) << "\n";
  } else {
    std::vector<report::Row> rows;
    for (std::size_t k = 0; k < table.classes().size(); ++k)
      rows.push_back({table.classes()[k].to_string(), table.values()[k].get_num().get_str(),
                      table.values()[k].get_den().get_str()});
    report::write_csv(*sink, config, {"cycle_type", "numerator", "denominator"}, rows);
  }
  return kPass;
}

int cmd_exact(const std::string& word_text, std::size_t n, const std::string& route,
              std::uint64_t budget, const Common& common, std::ostream& out) {
  const auto word = grammar::parse_word(word_text, n);
  moments::ExactOptions opt;
  opt.max_index_tuples = budget;
  std::optional<Rational> direct, pairing;
  if (route == "direct" || route == "both") direct = moments::exact_trace_expectation_direct(word, opt);
  if (route == "pairing" || route == "both")
    pairing = moments::exact_trace_expectation_pairing(word, opt);
  const Rational value = direct ? *direct : *pairing;
  const bool agree = !(direct && pairing) || *direct == *pairing;

  const auto config = with_common({{"command", "exact"},
                                   {"word", word.describe()},
                                   {"N", std::to_string(n)},
                                   {"route", route},
                                   {"budget", std::to_string(budget)}},
                                  common);
  Sink sink(common.out_path, out);
  if (common.format == "json") {
    nlohmann::json body{{"word", word.describe()},
                        {"N", n},
                        {"value", rational_field(value)},
                        {"value_double", to_double(value)},
                        {"routes_agree", agree}};
    if (direct) body["direct"] = rational_field(*direct);
    if (pairing) body["pairing"] = rational_field(*pairing);
    *sink << report::document(config, "result", body).dump(2) << "\n";
  } else {
    report::write_csv(*sink, config,
                      {"word", "N", "value", "value_double", "direct", "pairing", "routes_agree"},
                      {{word.describe(), std::to_string(n), rational_field(value),
                        report::format_double(to_double(value)),
                        direct ? rational_field(*direct) : "", pairing ? rational_field(*pairing) : "",
                        agree ? "true" : "false"}});
  }
  return agree ? kPass : kToleranceFailure;
}

int cmd_mc(const std::string& word_text, std::size_t n, std::uint64_t samples, std::uint64_t seed,
           std::optional<double> expect, double tolerance_se, const Common& common,
           std::ostream& out) {
  const auto word = grammar::parse_word(word_text, n);
  sampler::EstimateOptions opt;
  opt.threads = common.threads;
  const auto r = sampler::estimate_word_trace(word, samples, seed, opt);

  std::size_t b = 1, d = n;
  for (const auto& l : word.letters())
    if (l.perm.kind() == perms::EntryPermutation::Kind::PartialTranspose) {
      b = l.perm.shape().b();
      d = l.perm.shape().d();
      break;
    }
  const bool pass = !expect || std::abs(r.mean - *expect) <= tolerance_se * r.std_error + 1e-9;

  auto config = with_common({{"command", "mc"},
                             {"word", word.describe()},
                             {"N", std::to_string(n)},
                             {"samples", std::to_string(samples)},
                             {"seed", std::to_string(seed)}},
                            common);
  if (expect) {
    config.emplace_back("expect", report::format_double(*expect));
    config.emplace_back("tolerance_se", report::format_double(tolerance_se));
  }
  Sink sink(common.out_path, out);
  if (common.format == "json") {
    nlohmann::json body{{"word", r.description}, {"N", n},
                        {"b", b},                {"d", d},
                        {"n_samples", r.n_samples}, {"seed", r.seed},
                        {"mean_re", r.mean.real()}, {"mean_im", r.mean.imag()},
                        {"std_error", r.std_error}};
    if (expect) body["pass"] = pass;
    *sink << report::document(config, "estimate", body).dump(2) << "\n";
  } else {
    report::write_csv(*sink, config,
                      {"word", "N", "b", "d", "n_samples", "seed", "mean_re", "mean_im", "std_error"},
                      {{r.description, std::to_string(n), std::to_string(b), std::to_string(d),
                        std::to_string(r.n_samples), std::to_string(r.seed),
                        report::format_double(r.mean.real()), report::format_double(r.mean.imag()),
                        report::format_double(r.std_error)}});
  }
  return pass ? kPass : kToleranceFailure;
}

int cmd_predict(const std::string& pattern_text, std::size_t b, const std::string& model,
                const Common& common, std::ostream& out) {
  const auto pattern = grammar::parse_pattern(pattern_text);
  std::map<std::string, moments::CumulantSpec> specs;
  for (const auto& l : pattern) {
    if (specs.count(l.label)) continue;
    if (model == "haar") specs.emplace(l.label, moments::CumulantSpec::haar());
    if (model == "transpose") specs.emplace(l.label, moments::CumulantSpec::transpose(b));
    if (model == "block") specs.emplace(l.label, moments::CumulantSpec::block(b));
  }
  const Rational value = moments::moments_from_cumulants(specs, pattern);
  std::string pattern_echo;
  for (const auto& l : pattern)
    pattern_echo += (pattern_echo.empty() ? "" : " ") + l.label + (l.sign == ncpart::Sign::Star ? "*" : "");
  const auto config = with_common({{"command", "predict"},
                                   {"pattern", pattern_echo},
                                   {"b", std::to_string(b)},
                                   {"model", model}},
                                  common);
  Sink sink(common.out_path, out);
  if (common.format == "json") {
    *sink << report::document(config, "prediction",
                              {{"pattern", pattern_echo},
                               {"value", rational_field(value)},
                               {"value_double", to_double(value)}})
                 .dump(2)
          << "\n";
  } else {
    report::write_csv(*sink, config, {"pattern", "model", "b", "value", "value_double"},
                      {{pattern_echo, model, std::to_string(b), rational_field(value),
                        report::format_double(to_double(value))}});
  }
  return kPass;
}

nlohmann::json pair_json(const freeness::PairVerdict& v) {
  nlohmann::json fractions = nlohmann::json::array();
  for (const auto& [n, f] : v.fractions)
    fractions.push_back({n, f.get_num().get_str(), f.get_den().get_str()});
  nlohmann::json predicted = nullptr;
  if (v.clause.verdict != freeness::Verdict::Inconclusive)
    predicted = v.clause.verdict == freeness::Verdict::Free;
  return {{"schema_version", report::kSchemaVersion},
          {"pair", v.pair},
          {"clause", v.clause.clause},
          {"predicted_free", predicted},
          {"verdict", freeness::to_string(v.clause.verdict)},
          {"fractions", fractions},
          {"heuristic", v.clause.heuristic},
          {"detail", v.clause.detail},
          {"diagnostics", v.diagnostics}};
}

int cmd_freeness(const std::vector<std::string>& spec_texts, const std::string& grid_text,
                 const Common& common, std::ostream& out) {
  std::vector<freeness::TransposeSpec> specs;
  for (const auto& s : spec_texts) specs.push_back(grammar::parse_transpose_spec(s));
  const auto grid = grammar::parse_grid(grid_text);
  const auto family = freeness::predict_family(specs, grid);

  report::Config config{{"command", "freeness"}};
  for (std::size_t k = 0; k < specs.size(); ++k)
    config.emplace_back("spec" + std::to_string(k + 1), specs[k].describe());
  config.emplace_back("grid", grid_text);
  config = with_common(config, common);

  Sink sink(common.out_path, out);
  if (common.format == "json") {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& v : family.pairs) pairs.push_back(pair_json(v));
    *sink << report::document(config, "verdicts",
                              {{"family", freeness::to_string(family.verdict)}, {"pairs", pairs}})
                 .dump(2)
          << "\n";
  } else {
    std::vector<report::Row> rows;
    for (const auto& v : family.pairs)
      for (const auto& [n, f] : v.fractions)
        rows.push_back({v.pair, v.clause.clause, freeness::to_string(v.clause.verdict),
                        v.clause.heuristic ? "true" : "false", std::to_string(n),
                        f.get_num().get_str(), f.get_den().get_str()});
    report::write_csv(*sink, config,
                      {"pair", "clause", "verdict", "heuristic", "N", "numerator", "denominator"},
                      rows);
    for (const auto& v : family.pairs)
      for (const auto& diag : v.diagnostics) *sink << "# diagnostic: " << v.pair << ": " << diag << "\n";
    *sink << "# family=" << freeness::to_string(family.verdict) << "\n";
  }
  return kPass;
}

int cmd_reproduce(const std::string& name, const experiments::ExperimentConfig& config,
                  const Common& common, std::ostream& out) {
  const auto rep = experiments::run_experiment(name, config);
  Sink sink(common.out_path, out);
  const auto echo = with_common(experiments::echo(rep), common);
  if (common.format == "json") {
    *sink << report::document(echo, "report", experiments::to_json(rep)).dump(2) << "\n";
  } else {
    report::write_csv(*sink, echo, experiments::csv_header(), experiments::csv_rows(rep));
    for (const auto& note : rep.notes) *sink << "# " << note << "\n";
    *sink << "# result=" << (rep.pass ? "PASS" : "FAIL") << "\n";
  }
  return rep.pass ? kPass : kToleranceFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ptlab: partial transposes of Haar unitaries"};
  app.require_subcommand(1);
  Common common;

  auto* wg = app.add_subcommand("wg", "Exact Weingarten table on S_n");
  std::size_t wg_n = 0;
  long wg_big_n = 0;
  wg->add_option("--n", wg_n, "Degree n")->required();
  wg->add_option("--N", wg_big_n, "Matrix dimension N")->required();
  add_common(wg, common);

  auto* exact = app.add_subcommand("exact", "Exact E tr of a word");
  std::string word;
  std::size_t dim = 0;
  std::string route = "both";
  std::uint64_t budget = moments::ExactOptions{}.max_index_tuples;
  exact->add_option("--word", word, "Word, e.g. \"A:G(1,2,2) A':G(1,2,2)\"")->required();
  exact->add_option("--N", dim, "Matrix dimension")->required();
  exact->add_option("--route", route, "direct, pairing or both")
      ->check(CLI::IsMember({"direct", "pairing", "both"}))
      ->capture_default_str();
  exact->add_option("--budget", budget, "Maximum number of index tuples")->capture_default_str();
  add_common(exact, common);

  auto* mc = app.add_subcommand("mc", "Monte Carlo E tr of a word");
  std::uint64_t samples = 10000, seed = 7;
  std::optional<double> expect;
  double tolerance_se = 4.0;
  mc->add_option("--word", word, "Word")->required();
  mc->add_option("--N", dim, "Matrix dimension")->required();
  mc->add_option("--samples", samples)->capture_default_str();
  mc->add_option("--seed", seed)->capture_default_str();
  mc->add_option("--expect", expect, "Compare the mean against this value");
  mc->add_option("--tolerance", tolerance_se, "Band in standard errors")->capture_default_str();
  add_common(mc, common);

  auto* predict = app.add_subcommand("predict", "Large-N moment from free cumulants");
  std::string pattern, model = "transpose";
  std::size_t b = 2;
  predict->add_option("--pattern", pattern, "Sign pattern, e.g. uu*uu*")->required();
  predict->add_option("--b", b, "Block count")->capture_default_str();
  predict->add_option("--model", model, "haar, transpose or block")
      ->check(CLI::IsMember({"haar", "transpose", "block"}))
      ->capture_default_str();
  add_common(predict, common);

  auto* free = app.add_subcommand("freeness", "Asymptotic freeness of partial transposes");
  std::string spec1, spec2, grid = "8,16,32,64";
  std::vector<std::string> extra_specs;
  free->add_option("--spec1", spec1, "e.g. t=1,b=2,d=N/2")->required();
  free->add_option("--spec2", spec2)->required();
  free->add_option("--spec", extra_specs, "Further family members");
  free->add_option("--grid", grid, "Comma-separated matrix sizes")->capture_default_str();
  add_common(free, common);

  auto* repro = app.add_subcommand("reproduce", "Run a canned experiment");
  std::string name;
  std::optional<std::size_t> rb, rd;
  std::optional<std::uint64_t> rsamples, rseed;
  std::optional<double> rtol;
  std::string rgrid;
  repro->add_option("name", name, "thm16, counterexample, blocks, cor26, cor27 or diagfree")
      ->required();
  repro->add_option("--b", rb);
  repro->add_option("--d", rd);
  repro->add_option("--samples", rsamples);
  repro->add_option("--seed", rseed);
  repro->add_option("--tolerance", rtol, "Band in standard errors");
  repro->add_option("--grid", rgrid, "Comma-separated sizes (cor26, cor27)");
  add_common(repro, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (wg->parsed()) return cmd_wg(wg_n, wg_big_n, common, out);
    if (exact->parsed()) return cmd_exact(word, dim, route, budget, common, out);
    if (mc->parsed()) return cmd_mc(word, dim, samples, seed, expect, tolerance_se, common, out);
    if (predict->parsed()) return cmd_predict(pattern, b, model, common, out);
    if (free->parsed()) {
      std::vector<std::string> specs{spec1, spec2};
      specs.insert(specs.end(), extra_specs.begin(), extra_specs.end());
      return cmd_freeness(specs, grid, common, out);
    }
    if (repro->parsed()) {
      if (!experiments::is_experiment(name)) {
        std::string names;
        for (const auto& n : experiments::experiment_names()) names += " " + n;
        err << "usage error: unknown experiment '" << name << "'; choose one of:" << names << "\n";
        return kUsageError;
      }
      auto config = experiments::default_config(name);
      if (rb) config.b = *rb;
      if (rd) config.d = *rd;
      if (rsamples) config.samples = *rsamples;
      if (rseed) config.seed = *rseed;
      if (rtol) config.tolerance_se = *rtol;
      if (!rgrid.empty()) config.grid = grammar::parse_grid(rgrid);
      config.threads = common.threads;
      return cmd_reproduce(name, config, common, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kCapacityError;
  } catch (const SingularityError& e) {
    err << "singularity error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ContractError& e) {
    err << "config error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace ptlab::cli
