#pragma once

// Canned reproductions: each compares a prediction with an exact or Monte
// Carlo measurement and reports pass/fail per quantity.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "ptlab/report.hpp"

namespace ptlab::experiments {

struct ExperimentConfig {
  std::size_t b = 2;
  std::size_t d = 64;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 7;
  std::size_t threads = 0;
  double tolerance_se = 4.0;            // Monte Carlo band in standard errors
  std::vector<std::size_t> grid;        // freeness experiments
};

struct Measurement {
  std::string quantity;
  std::string kind;  // "mc" or "exact"
  std::string prediction_exact;  // rational, when known exactly
  double prediction = 0;
  std::complex<double> measured;
  double std_error = 0;
  bool pass = false;
  std::string note;
};

struct ExperimentReport {
  std::string name;
  ExperimentConfig config;
  std::vector<Measurement> rows;
  std::vector<std::string> notes;
  bool pass = false;
  double seconds = 0;
};

std::vector<std::string> experiment_names();
bool is_experiment(const std::string& name);
// Desk-scale defaults for one experiment.
ExperimentConfig default_config(const std::string& name);
// Throws DomainError for an unknown name.
ExperimentReport run_experiment(const std::string& name, const ExperimentConfig& config);

report::Config echo(const ExperimentReport& r);
report::Row csv_header();
std::vector<report::Row> csv_rows(const ExperimentReport& r);
nlohmann::json to_json(const ExperimentReport& r);

}  // namespace ptlab::experiments
