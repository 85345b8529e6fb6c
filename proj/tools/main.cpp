#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rqmcbet/cli_commands.hpp"
#include "rqmcbet/intervals.hpp"

namespace cli = rqmcbet::cli;

int main(int argc, char** argv) {
  CLI::App app{
      "Scrambled-net quasi-Monte Carlo mean estimation with finite-sample "
      "confidence intervals"};
  app.require_subcommand(1);

  cli::CiOptions ci_opt;
  std::vector<std::string> ci_methods;
  auto* ci = app.add_subcommand(
      "ci", "Confidence intervals for a file of replicate means in [0,1]");
  ci->add_option("input", ci_opt.input_path,
                 "input file, one value per line ('-' for stdin)")
      ->required();
  ci->add_option("--method", ci_methods,
                 "methods: hoeffding, maurer_pontil, clt, ebci, hbci "
                 "(default: all)")
      ->delimiter(',');
  ci->add_option("--alpha", ci_opt.alpha, "miscoverage level");
  ci->add_option("--c", ci_opt.c, "bet truncation level");
  ci->add_option("--theta-hedge", ci_opt.theta_hedge, "hedge weight");

  cli::AllocateOptions al_opt;
  auto* al = app.add_subcommand(
      "allocate", "Optimal points-per-replicate split of a point budget");
  al->add_option("--N", al_opt.N, "total point budget")->required();
  al->add_option("--theta", al_opt.theta, "variance decay exponent")->required();
  al->add_option("--sigma0-sq", al_opt.sigma0_sq, "variance at n = 1")
      ->required();
  al->add_option("--alpha", al_opt.alpha, "miscoverage level");
  al->add_flag("--pow2,!--no-pow2", al_opt.pow2,
               "restrict the discrete search to powers of 2 (default on)");

  cli::OracleTableOptions ot_opt;
  auto* ot = app.add_subcommand(
      "oracle-table",
      "Known-variance benchmark widths over a range of budgets");
  ot->add_option("--integrand", ot_opt.integrand,
                 "indicator_third or smooth_1d");
  ot->add_option("--budgets", ot_opt.budgets, "budgets N (powers of 2)")
      ->delimiter(',')
      ->required();
  ot->add_option("--alpha", ot_opt.alpha, "miscoverage level");

  cli::ExperimentOptions ex_opt;
  std::int64_t ex_seed = 0;
  auto* ex = app.add_subcommand(
      "experiment", "Width/coverage grid driven by a key=value config file");
  ex->add_option("--config", ex_opt.config_path, "config file")->required();
  ex->add_option("--out", ex_opt.out_dir,
                 "output directory for records.csv, records.jsonl, summary.csv");
  ex->add_option("--format", ex_opt.format, "stdout format: csv or jsonl");
  ex->add_option("--jobs", ex_opt.jobs, "worker threads");
  ex->add_option("--reps", ex_opt.reps_override, "override config reps");
  auto* ex_seed_opt = ex->add_option("--seed", ex_seed, "override config seed");

  cli::RatioStudyOptions rs_opt;
  auto* rs = app.add_subcommand(
      "ratio-study",
      "Betting-interval width against the known-variance benchmark");
  rs->add_option("--integrand", rs_opt.integrand,
                 "indicator_third or smooth_1d");
  rs->add_option("--budgets", rs_opt.budgets, "budgets N (powers of 2)")
      ->delimiter(',')
      ->required();
  rs->add_option("--sizes", rs_opt.sizes, "points per replicate (powers of 2)")
      ->delimiter(',')
      ->required();
  rs->add_option("--reps", rs_opt.reps, "repetitions per cell");
  rs->add_option("--alpha", rs_opt.alpha, "miscoverage level");
  rs->add_option("--seed", rs_opt.seed, "base seed");
  rs->add_option("--jobs", rs_opt.jobs, "worker threads");
  rs->add_option("--out", rs_opt.out_path, "output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kValidationError;
  }

  try {
    if (*ci) {
      for (const auto& name : ci_methods)
        ci_opt.methods.push_back(rqmcbet::method_from_name(name));
      return cli::cmd_ci(ci_opt, std::cout, std::cerr);
    }
    if (*al) return cli::cmd_allocate(al_opt, std::cout, std::cerr);
    if (*ot) return cli::cmd_oracle_table(ot_opt, std::cout, std::cerr);
    if (*ex) {
      if (ex_seed_opt->count() > 0) {
        ex_opt.has_seed_override = true;
        ex_opt.seed_override = std::uint64_t(ex_seed);
      }
      return cli::cmd_experiment(ex_opt, std::cout, std::cerr);
    }
    if (*rs) return cli::cmd_ratio_study(rs_opt, std::cout, std::cerr);
  } catch (const std::invalid_argument& ex2) {
    std::cerr << "error: " << ex2.what() << "\n";
    return cli::kValidationError;
  } catch (const std::exception& ex2) {
    std::cerr << "error: " << ex2.what() << "\n";
    return cli::kIoError;
  }
  return cli::kValidationError;
}
