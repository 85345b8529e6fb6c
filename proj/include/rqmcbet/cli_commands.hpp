#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rqmcbet/intervals.hpp"

namespace rqmcbet::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kIoError = 1;
inline constexpr int kValidationError = 2;

struct CiOptions {
  std::string input_path;  // "-" reads stdin
  std::vector<Method> methods;  // empty: hoeffding, maurer_pontil, clt, ebci, hbci
  double alpha = 0.05;
  double c = 0.5;
  double theta_hedge = 0.5;
};
int cmd_ci(const CiOptions& opt, std::ostream& out, std::ostream& err);

struct AllocateOptions {
  double N = 0;
  double theta = 0;
  double sigma0_sq = 0;
  double alpha = 0.05;
  bool pow2 = true;
};
int cmd_allocate(const AllocateOptions& opt, std::ostream& out, std::ostream& err);

struct OracleTableOptions {
  std::string integrand = "indicator_third";
  std::vector<std::int64_t> budgets;
  double alpha = 0.05;
};
int cmd_oracle_table(const OracleTableOptions& opt, std::ostream& out,
                     std::ostream& err);

struct ExperimentOptions {
  std::string config_path;
  std::string out_dir;        // empty: records go to stdout only
  std::string format = "csv"; // stdout format: csv or jsonl
  int jobs = 1;
  int reps_override = 0;      // 0: keep the config value
  bool has_seed_override = false;
  std::uint64_t seed_override = 0;
};
int cmd_experiment(const ExperimentOptions& opt, std::ostream& out,
                   std::ostream& err);

struct RatioStudyOptions {
  std::string integrand = "indicator_third";
  std::vector<std::int64_t> budgets;
  std::vector<std::int64_t> sizes;
  int reps = 20;
  double alpha = 0.05;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string out_path;  // empty: stdout
};
int cmd_ratio_study(const RatioStudyOptions& opt, std::ostream& out,
                    std::ostream& err);

}  // namespace rqmcbet::cli
