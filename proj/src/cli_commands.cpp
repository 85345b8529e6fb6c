#include "rqmcbet/cli_commands.hpp"

#include <bit>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rqmcbet/allocation.hpp"
#include "rqmcbet/experiment.hpp"
#include "rqmcbet/stratified_variance.hpp"
#include "rqmcbet/text_io.hpp"

namespace rqmcbet::cli {

namespace {

int log2_exact(std::int64_t v) {
  return std::countr_zero(std::uint64_t(v));
}

std::vector<double> read_values(std::istream& is) {
  std::vector<double> values;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(b, e - b + 1);
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(token, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != token.size())
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": not a number: '" + token + "'");
    if (!(v >= 0.0 && v <= 1.0))
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": value outside [0,1]: " + token);
    values.push_back(v);
  }
  return values;
}

}  // namespace

int cmd_ci(const CiOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<double> y;
  try {
    if (opt.input_path == "-") {
      y = read_values(std::cin);
    } else {
      std::ifstream in(opt.input_path);
      if (!in) {
        err << "ci: cannot open '" << opt.input_path << "'\n";
        return kIoError;
      }
      y = read_values(in);
    }
  } catch (const std::invalid_argument& ex) {
    err << "ci: " << ex.what() << "\n";
    return kValidationError;
  }
  if (y.empty()) {
    err << "ci: input contains no values\n";
    return kValidationError;
  }

  std::vector<Method> methods = opt.methods;
  if (methods.empty())
    methods = {Method::hoeffding, Method::maurer_pontil, Method::clt,
               Method::ebci, Method::hbci};

  BetParams bp;
  bp.alpha = opt.alpha;
  bp.c = opt.c;
  bp.theta = opt.theta_hedge;
  try {
    bp.validate();
    for (const Method m : methods) {
      Interval iv;
      switch (m) {
        case Method::hoeffding: iv = hoeffding_ci(y, opt.alpha); break;
        case Method::bennett:
          err << "ci: bennett needs a known variance; not available here\n";
          return kValidationError;
        case Method::maurer_pontil: iv = maurer_pontil_ci(y, opt.alpha); break;
        case Method::clt: iv = clt_ci(y, opt.alpha); break;
        case Method::ebci: iv = prpl_eb_ci(y, bp); break;
        case Method::hbci: iv = hbci(y, bp); break;
      }
      out << interval_json(iv) << "\n";
    }
  } catch (const std::invalid_argument& ex) {
    err << "ci: " << ex.what() << "\n";
    return kValidationError;
  } catch (const std::domain_error& ex) {
    err << "ci: " << ex.what() << "\n";
    return kValidationError;
  }
  return kOk;
}

int cmd_allocate(const AllocateOptions& opt, std::ostream& out,
                 std::ostream& err) {
  try {
    const VarianceModel vm{opt.sigma0_sq, opt.theta};
    const AllocationResult res =
        optimal_n_discrete(std::int64_t(opt.N), vm, opt.alpha, opt.pow2);
    const double bound = guidance_bound(opt.N, opt.theta, opt.alpha);
    const double ratio = width_ratio(opt.N, vm, opt.alpha);
    out << "{\"N\":" << fmt9(opt.N) << ",\"theta\":" << fmt9(opt.theta)
        << ",\"sigma0_sq\":" << fmt9(opt.sigma0_sq)
        << ",\"alpha\":" << fmt9(opt.alpha) << ",\"n_star\":" << fmt9(res.n_star)
        << ",\"n\":" << res.n << ",\"half_width\":" << fmt9(res.half_width)
        << ",\"width\":" << fmt9(2.0 * res.half_width)
        << ",\"effective_budget\":" << fmt9(res.effective_budget)
        << ",\"guidance_bound\":" << fmt9(bound)
        << ",\"width_ratio\":" << fmt9(ratio) << "}\n";
  } catch (const std::invalid_argument& ex) {
    err << "allocate: " << ex.what() << "\n";
    return kValidationError;
  }
  return kOk;
}

int cmd_oracle_table(const OracleTableOptions& opt, std::ostream& out,
                     std::ostream& err) {
  try {
    const IntegrandInfo& info = integrand_info(opt.integrand);
    if (!info.has_exact_variance) {
      err << "oracle-table: integrand '" << opt.integrand
          << "' has no exact variance oracle\n";
      return kValidationError;
    }
    if (opt.budgets.empty()) {
      err << "oracle-table: no budgets given\n";
      return kValidationError;
    }
    // Variance decay exponent of the oracle: width scales like N^(-t/(t+1)).
    const double theta = opt.integrand == "indicator_third" ? 2.0 : 3.0;
    out << "log2N,N,n,width,scaled_width\n";
    for (const std::int64_t N : opt.budgets) {
      if (N < 1 || N > (std::int64_t(1) << 28) ||
          !std::has_single_bit(std::uint64_t(N)))
        throw std::invalid_argument("budgets must be powers of 2, at most 2^28");
      std::vector<std::int64_t> candidates;
      for (std::int64_t n = 1; n <= N; n *= 2) {
        candidates.push_back(n);
        if (n > N / 2) break;
      }
      const auto sigma = [&info](std::int64_t n) { return info.exact_sigma_sq(n); };
      const DiscreteSearchResult res = optimal_n_over(candidates, N, sigma, opt.alpha);
      const double width = 2.0 * res.half_width;
      const double scaled = std::pow(double(N), theta / (theta + 1.0)) * width;
      out << log2_exact(N) << ',' << N << ',' << res.n << ',' << fmt9(width)
          << ',' << fmt9(scaled) << '\n';
    }
  } catch (const std::invalid_argument& ex) {
    err << "oracle-table: " << ex.what() << "\n";
    return kValidationError;
  }
  return kOk;
}

int cmd_experiment(const ExperimentOptions& opt, std::ostream& out,
                   std::ostream& err) {
  ExperimentConfig cfg;
  try {
    std::ifstream in(opt.config_path);
    if (!in) {
      err << "experiment: cannot open config '" << opt.config_path << "'\n";
      return kIoError;
    }
    cfg = parse_experiment_config(in);
    if (opt.reps_override > 0) cfg.reps = opt.reps_override;
    if (opt.has_seed_override) cfg.seed = opt.seed_override;
    cfg.validate();
    if (opt.format != "csv" && opt.format != "jsonl")
      throw std::invalid_argument("format must be csv or jsonl");
  } catch (const std::invalid_argument& ex) {
    err << "experiment: " << ex.what() << "\n";
    return kValidationError;
  }

  std::vector<ExperimentRecord> records;
  try {
    records = run_experiment(cfg, opt.jobs, &err);
  } catch (const std::exception& ex) {
    err << "experiment: " << ex.what() << "\n";
    return kIoError;
  }
  const std::vector<SummaryRow> rows = summarize(records);

  if (opt.out_dir.empty()) {
    if (opt.format == "csv")
      write_records_csv(records, out);
    else
      write_records_jsonl(records, out);
    return kOk;
  }
  std::error_code ec;
  std::filesystem::create_directories(opt.out_dir, ec);
  if (ec) {
    err << "experiment: cannot create directory '" << opt.out_dir << "'\n";
    return kIoError;
  }
  const auto in_dir = [&](const char* leaf) {
    return (std::filesystem::path(opt.out_dir) / leaf).string();
  };
  const std::string csv_path = in_dir("records.csv");
  const std::string jsonl_path = in_dir("records.jsonl");
  const std::string summary_path = in_dir("summary.csv");
  {
    std::ofstream os(csv_path);
    if (!os) {
      err << "experiment: cannot write '" << csv_path << "'\n";
      return kIoError;
    }
    write_records_csv(records, os);
  }
  {
    std::ofstream os(jsonl_path);
    if (!os) {
      err << "experiment: cannot write '" << jsonl_path << "'\n";
      return kIoError;
    }
    write_records_jsonl(records, os);
  }
  {
    std::ofstream os(summary_path);
    if (!os) {
      err << "experiment: cannot write '" << summary_path << "'\n";
      return kIoError;
    }
    write_summary_csv(rows, os);
  }
  err << "experiment: wrote " << csv_path << ", " << jsonl_path << ", "
      << summary_path << "\n";
  return kOk;
}

int cmd_ratio_study(const RatioStudyOptions& opt, std::ostream& out,
                    std::ostream& err) {
  std::vector<RatioRecord> rows;
  try {
    rows = width_ratio_study(opt.integrand, opt.budgets, opt.sizes, opt.reps,
                             opt.alpha, opt.seed, opt.jobs, &err);
  } catch (const std::invalid_argument& ex) {
    err << "ratio-study: " << ex.what() << "\n";
    return kValidationError;
  }
  if (opt.out_path.empty()) {
    write_ratio_csv(rows, out);
    return kOk;
  }
  std::ofstream os(opt.out_path);
  if (!os) {
    err << "ratio-study: cannot write '" << opt.out_path << "'\n";
    return kIoError;
  }
  write_ratio_csv(rows, os);
  return kOk;
}

}  // namespace rqmcbet::cli
