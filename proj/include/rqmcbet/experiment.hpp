#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rqmcbet/intervals.hpp"
#include "rqmcbet/replicates.hpp"

namespace rqmcbet {

// A named test integrand with its dimension rule and known ground truth.
struct IntegrandInfo {
  std::string name;
  bool one_dim = false;  // restricted to d == 1
  double true_mean = 0;
  bool has_exact_variance = false;

  Integrand make(int d) const;
  double exact_sigma_sq(std::int64_t n) const;  // throws without exact variance
};

const IntegrandInfo& integrand_info(std::string_view name);
std::vector<std::string> known_integrands();

struct ExperimentConfig {
  std::vector<std::string> integrands;
  std::vector<int> dims;
  std::vector<std::int64_t> budgets;  // total point budgets N
  std::vector<std::int64_t> sizes;    // points per replicate n
  std::vector<Method> methods{Method::hbci, Method::ebci, Method::clt};
  int reps = 20;
  double alpha = 0.05;
  double c = 0.5;
  double theta_hedge = 0.5;
  std::uint64_t seed = 1;

  void validate() const;
};

// Flat key=value text, one entry per line; '#' starts a comment. List values
// are comma separated. Unknown keys are rejected by name.
ExperimentConfig parse_experiment_config(std::istream& is);

struct ExperimentRecord {
  std::string integrand;
  int d = 0;
  std::int64_t N = 0;
  std::int64_t n = 0;
  int R = 0;
  Method method{};
  int rep = 0;
  double width = 0;
  bool covered = false;
  std::uint64_t seed = 0;
  std::string error;  // empty on success
};

// Deterministic over (config, seed): record order and content do not depend
// on the number of worker threads.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg,
                                             int jobs = 1,
                                             std::ostream* progress = nullptr);

struct SummaryRow {
  std::string integrand;
  Method method{};
  std::int64_t N = 0;
  std::int64_t n = 0;
  double mean_width = 0;
  int count = 0;
  bool min_over_n = false;  // smallest mean width among this (integrand, method, N)
};

std::vector<SummaryRow> summarize(const std::vector<ExperimentRecord>& records);

struct RatioRecord {
  std::string integrand;
  std::int64_t N = 0;
  std::int64_t n = 0;
  int R = 0;
  double mean_hbci_width = 0;
  double bennett_width = 0;  // oracle-variance width 2H
  double ratio = 0;
};

// Mean betting-interval width against the known-variance benchmark width,
// per (N, n) cell; only integrands with an exact variance oracle qualify.
std::vector<RatioRecord> width_ratio_study(const std::string& integrand,
                                           std::span<const std::int64_t> budgets,
                                           std::span<const std::int64_t> sizes,
                                           int reps, double alpha,
                                           std::uint64_t seed, int jobs = 1,
                                           std::ostream* progress = nullptr);

// Seed for one (integrand, d, N, n, rep) cell, derived from content so runs
// are reproducible regardless of config ordering.
std::uint64_t cell_seed(std::uint64_t base, std::string_view integrand, int d,
                        std::int64_t N, std::int64_t n, int rep);

void write_records_csv(std::span<const ExperimentRecord> records, std::ostream& os);
void write_records_jsonl(std::span<const ExperimentRecord> records, std::ostream& os);
void write_summary_csv(std::span<const SummaryRow> rows, std::ostream& os);
void write_ratio_csv(std::span<const RatioRecord> rows, std::ostream& os);

}  // namespace rqmcbet
