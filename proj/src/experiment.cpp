#include "rqmcbet/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "rqmcbet/allocation.hpp"
#include "rqmcbet/parallel.hpp"
#include "rqmcbet/ridge.hpp"
#include "rqmcbet/rng.hpp"
#include "rqmcbet/stratified_variance.hpp"
#include "rqmcbet/text_io.hpp"

namespace rqmcbet {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (const char ch : s) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h;
}

bool is_pow2(std::int64_t v) {
  return v >= 1 && std::has_single_bit(std::uint64_t(v));
}

const std::vector<IntegrandInfo>& registry() {
  static const std::vector<IntegrandInfo> infos = [] {
    std::vector<IntegrandInfo> v;
    for (const auto kind : {RidgeKind::jump, RidgeKind::kink, RidgeKind::smooth,
                            RidgeKind::finance}) {
      IntegrandInfo info;
      info.name = std::string(ridge_kind_name(kind));
      info.true_mean = ridge_true_mean(kind);
      v.push_back(std::move(info));
    }
    IntegrandInfo ind;
    ind.name = "indicator_third";
    ind.one_dim = true;
    ind.true_mean = 1.0 / 3.0;
    ind.has_exact_variance = true;
    v.push_back(std::move(ind));
    IntegrandInfo sm;
    sm.name = "smooth_1d";
    sm.one_dim = true;
    sm.true_mean = std::exp(-1.0);
    sm.has_exact_variance = true;
    v.push_back(std::move(sm));
    return v;
  }();
  return infos;
}

}  // namespace

Integrand IntegrandInfo::make(int d) const {
  if (one_dim && d != 1)
    throw std::invalid_argument(name + " is one-dimensional; got d=" +
                                std::to_string(d));
  if (name == "indicator_third")
    return [](std::span<const double> x) { return x[0] < 1.0 / 3.0 ? 1.0 : 0.0; };
  if (name == "smooth_1d")
    return [](std::span<const double> x) { return x[0] * std::exp(x[0] - 1.0); };
  const RidgeKind kind = ridge_kind_from_name(name);
  return [kind](std::span<const double> x) { return eval_ridge(kind, x); };
}

double IntegrandInfo::exact_sigma_sq(std::int64_t n) const {
  if (name == "indicator_third") return var_indicator_third(n);
  if (name == "smooth_1d") return var_smooth_exact(n);
  throw std::logic_error(name + " has no exact variance oracle");
}

const IntegrandInfo& integrand_info(std::string_view name) {
  for (const auto& info : registry())
    if (info.name == name) return info;
  throw std::invalid_argument("unknown integrand: " + std::string(name));
}

std::vector<std::string> known_integrands() {
  std::vector<std::string> names;
  for (const auto& info : registry()) names.push_back(info.name);
  return names;
}

void ExperimentConfig::validate() const {
  if (integrands.empty())
    throw std::invalid_argument("experiment config: no integrands");
  if (dims.empty()) throw std::invalid_argument("experiment config: no dims");
  if (budgets.empty())
    throw std::invalid_argument("experiment config: no budgets");
  if (sizes.empty()) throw std::invalid_argument("experiment config: no sizes");
  if (methods.empty())
    throw std::invalid_argument("experiment config: no methods");
  if (reps < 1) throw std::invalid_argument("experiment config: reps must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("experiment config: alpha must lie in (0,1)");
  if (!(c > 0.0 && c < 1.0))
    throw std::invalid_argument("experiment config: c must lie in (0,1)");
  if (!(theta_hedge >= 0.0 && theta_hedge <= 1.0))
    throw std::invalid_argument("experiment config: theta_hedge must lie in [0,1]");

  bool any_one_dim = false;
  for (const auto& name : integrands) {
    const auto& info = integrand_info(name);  // throws on unknown names
    any_one_dim = any_one_dim || info.one_dim;
    for (const Method m : methods)
      if (m == Method::bennett && !info.has_exact_variance)
        throw std::invalid_argument(
            "experiment config: bennett requires an exact variance oracle, "
            "which '" + name + "' lacks");
  }
  for (const int d : dims) {
    if (d < 1 || d > 64)
      throw std::invalid_argument("experiment config: dims must lie in [1,64]");
    if (any_one_dim && d != 1)
      throw std::invalid_argument(
          "experiment config: one-dimensional integrands require dims = 1");
  }
  for (const std::int64_t N : budgets)
    if (!is_pow2(N))
      throw std::invalid_argument("experiment config: budgets must be powers of 2");
  for (const std::int64_t n : sizes) {
    if (!is_pow2(n))
      throw std::invalid_argument("experiment config: sizes must be powers of 2");
    for (const std::int64_t N : budgets)
      if (n > N)
        throw std::invalid_argument(
            "experiment config: every size must divide every budget");
  }
}

namespace {

template <typename T>
std::vector<T> parse_list(const std::string& value, const std::string& key,
                          T (*one)(const std::string&)) {
  std::vector<T> out;
  std::string item;
  std::stringstream ss(value);
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw std::invalid_argument("config key '" + key + "': empty list item");
    out.push_back(one(item.substr(b, e - b + 1)));
  }
  if (out.empty())
    throw std::invalid_argument("config key '" + key + "': empty value");
  return out;
}

std::string parse_str(const std::string& s) { return s; }

std::int64_t parse_i64(const std::string& s) {
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != s.size())
    throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

int parse_int(const std::string& s) { return int(parse_i64(s)); }

double parse_dbl(const std::string& s) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != s.size())
    throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

Method parse_method(const std::string& s) { return method_from_name(s); }

}  // namespace

ExperimentConfig parse_experiment_config(std::istream& is) {
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key=value");
    auto trim = [](std::string s) {
      const auto bb = s.find_first_not_of(" \t");
      if (bb == std::string::npos) return std::string();
      const auto ee = s.find_last_not_of(" \t");
      return s.substr(bb, ee - bb + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": empty key or value");
    try {
      if (key == "integrands") {
        cfg.integrands = parse_list<std::string>(value, key, parse_str);
      } else if (key == "dims") {
        cfg.dims = parse_list<int>(value, key, parse_int);
      } else if (key == "budgets") {
        cfg.budgets = parse_list<std::int64_t>(value, key, parse_i64);
      } else if (key == "sizes") {
        cfg.sizes = parse_list<std::int64_t>(value, key, parse_i64);
      } else if (key == "methods") {
        cfg.methods = parse_list<Method>(value, key, parse_method);
      } else if (key == "reps") {
        cfg.reps = parse_int(value);
      } else if (key == "alpha") {
        cfg.alpha = parse_dbl(value);
      } else if (key == "c") {
        cfg.c = parse_dbl(value);
      } else if (key == "theta_hedge") {
        cfg.theta_hedge = parse_dbl(value);
      } else if (key == "seed") {
        cfg.seed = std::uint64_t(parse_i64(value));
      } else {
        throw std::invalid_argument("unknown config key: " + key);
      }
    } catch (const std::exception& ex) {
      const std::string what = ex.what();
      // Keep messages that already carry their own config context.
      if (what.rfind("config ", 0) == 0 ||
          what.rfind("unknown config key", 0) == 0)
        throw;
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ", key '" + key + "': " + what);
    }
  }
  return cfg;
}

std::uint64_t cell_seed(std::uint64_t base, std::string_view integrand, int d,
                        std::int64_t N, std::int64_t n, int rep) {
  std::uint64_t h = mix_seed(base, fnv1a64(integrand));
  h = mix_seed(h, std::uint64_t(d));
  h = mix_seed(h, std::uint64_t(N));
  h = mix_seed(h, std::uint64_t(n));
  return mix_seed(h, std::uint64_t(rep));
}

namespace {

Interval interval_for(Method m, const ReplicateSample& sample,
                      const BetParams& bp, const IntegrandInfo& info) {
  Interval iv;
  switch (m) {
    case Method::hoeffding: iv = hoeffding_ci(sample.y, bp.alpha); break;
    case Method::bennett:
      iv = bennett_ci(sample.y, info.exact_sigma_sq(sample.n), bp.alpha);
      break;
    case Method::maurer_pontil: iv = maurer_pontil_ci(sample.y, bp.alpha); break;
    case Method::clt: iv = clt_ci(sample.y, bp.alpha); break;
    case Method::ebci: iv = prpl_eb_ci(sample.y, bp); break;
    case Method::hbci: iv = hbci(sample.y, bp); break;
  }
  iv.n = sample.n;
  return iv;
}

struct Cell {
  const IntegrandInfo* info;
  int d;
  std::int64_t N;
  std::int64_t n;
  int R;
};

class Progress {
 public:
  Progress(std::ostream* os, std::size_t total) : os_(os), total_(total) {}

  void bump() {
    if (!os_) return;
    const std::size_t done = ++done_;
    const std::size_t step = std::max<std::size_t>(1, total_ / 20);
    if (done % step == 0 || done == total_) {
      const std::lock_guard<std::mutex> lock(mu_);
      *os_ << "progress: " << done << "/" << total_ << " tasks\n";
    }
  }

 private:
  std::ostream* os_;
  std::size_t total_;
  std::atomic<std::size_t> done_{0};
  std::mutex mu_;
};

}  // namespace

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg,
                                             int jobs, std::ostream* progress) {
  cfg.validate();

  std::vector<Cell> cells;
  for (const auto& name : cfg.integrands) {
    const IntegrandInfo& info = integrand_info(name);
    for (const int d : cfg.dims)
      for (const std::int64_t N : cfg.budgets)
        for (const std::int64_t n : cfg.sizes)
          cells.push_back({&info, d, N, n, int(N / n)});
  }

  BetParams bp;
  bp.alpha = cfg.alpha;
  bp.c = cfg.c;
  bp.theta = cfg.theta_hedge;

  const std::size_t n_methods = cfg.methods.size();
  const std::size_t n_tasks = cells.size() * std::size_t(cfg.reps);
  std::vector<ExperimentRecord> records(n_tasks * n_methods);
  Progress prog(progress, n_tasks);

  parallel_for(n_tasks, jobs, [&](std::size_t task) {
    const Cell& cell = cells[task / std::size_t(cfg.reps)];
    const int rep = int(task % std::size_t(cfg.reps));
    const std::uint64_t seed =
        cell_seed(cfg.seed, cell.info->name, cell.d, cell.N, cell.n, rep);

    ExperimentRecord base;
    base.integrand = cell.info->name;
    base.d = cell.d;
    base.N = cell.N;
    base.n = cell.n;
    base.R = cell.R;
    base.rep = rep;
    base.seed = seed;

    ReplicateSample sample;
    std::string sample_error;
    try {
      sample = replicate_estimates(cell.info->make(cell.d), cell.d, cell.n,
                                   cell.R, seed, cell.info->name);
    } catch (const std::exception& ex) {
      sample_error = ex.what();
    }

    for (std::size_t mi = 0; mi < n_methods; ++mi) {
      ExperimentRecord rec = base;
      rec.method = cfg.methods[mi];
      if (sample_error.empty()) {
        try {
          const Interval iv = interval_for(rec.method, sample, bp, *cell.info);
          rec.width = iv.width();
          rec.covered = iv.contains(cell.info->true_mean);
        } catch (const std::exception& ex) {
          rec.width = kNan;
          rec.error = ex.what();
        }
      } else {
        rec.width = kNan;
        rec.error = sample_error;
      }
      records[task * n_methods + mi] = std::move(rec);
    }
    prog.bump();
  });
  return records;
}

std::vector<SummaryRow> summarize(const std::vector<ExperimentRecord>& records) {
  using Key = std::tuple<std::string, int, std::int64_t, std::int64_t>;
  std::map<Key, std::pair<double, int>> acc;
  for (const auto& rec : records) {
    if (!rec.error.empty()) continue;
    auto& slot = acc[{rec.integrand, int(rec.method), rec.N, rec.n}];
    slot.first += rec.width;
    slot.second += 1;
  }
  std::vector<SummaryRow> rows;
  rows.reserve(acc.size());
  for (const auto& [key, slot] : acc) {
    SummaryRow row;
    row.integrand = std::get<0>(key);
    row.method = Method(std::get<1>(key));
    row.N = std::get<2>(key);
    row.n = std::get<3>(key);
    row.mean_width = slot.first / double(slot.second);
    row.count = slot.second;
    rows.push_back(std::move(row));
  }
  // Flag the n with the smallest mean width within each (integrand, method, N).
  for (std::size_t i = 0; i < rows.size();) {
    std::size_t j = i;
    std::size_t best = i;
    while (j < rows.size() && rows[j].integrand == rows[i].integrand &&
           rows[j].method == rows[i].method && rows[j].N == rows[i].N) {
      if (rows[j].mean_width < rows[best].mean_width) best = j;
      ++j;
    }
    rows[best].min_over_n = true;
    i = j;
  }
  return rows;
}

std::vector<RatioRecord> width_ratio_study(const std::string& integrand,
                                           std::span<const std::int64_t> budgets,
                                           std::span<const std::int64_t> sizes,
                                           int reps, double alpha,
                                           std::uint64_t seed, int jobs,
                                           std::ostream* progress) {
  const IntegrandInfo& info = integrand_info(integrand);
  if (!info.has_exact_variance)
    throw std::invalid_argument(
        "width_ratio_study: integrand needs an exact variance oracle");
  if (reps < 1)
    throw std::invalid_argument("width_ratio_study: reps must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("width_ratio_study: alpha must lie in (0,1)");

  std::vector<std::pair<std::int64_t, std::int64_t>> cells;
  for (const std::int64_t N : budgets) {
    if (!is_pow2(N))
      throw std::invalid_argument("width_ratio_study: budgets must be powers of 2");
    for (const std::int64_t n : sizes) {
      if (!is_pow2(n))
        throw std::invalid_argument("width_ratio_study: sizes must be powers of 2");
      if (n <= N) cells.emplace_back(N, n);
    }
  }

  BetParams bp;
  bp.alpha = alpha;

  std::vector<RatioRecord> rows(cells.size());
  Progress prog(progress, cells.size());
  parallel_for(cells.size(), jobs, [&](std::size_t ci) {
    const auto [N, n] = cells[ci];
    const int R = int(N / n);
    double sum_width = 0;
    for (int rep = 0; rep < reps; ++rep) {
      const std::uint64_t s = cell_seed(seed, integrand, 1, N, n, rep);
      const ReplicateSample sample =
          replicate_estimates(info.make(1), 1, n, R, s, integrand);
      sum_width += hbci(sample.y, bp).width();
    }
    RatioRecord row;
    row.integrand = integrand;
    row.N = N;
    row.n = n;
    row.R = R;
    row.mean_hbci_width = sum_width / double(reps);
    row.bennett_width =
        2.0 * bennett_half_width(info.exact_sigma_sq(n), double(R), alpha);
    row.ratio = row.mean_hbci_width / row.bennett_width;
    rows[ci] = std::move(row);
    prog.bump();
  });
  return rows;
}

void write_records_csv(std::span<const ExperimentRecord> records,
                       std::ostream& os) {
  os << "integrand,d,N,n,R,method,rep,width,covered,seed\n";
  for (const auto& rec : records) {
    os << rec.integrand << ',' << rec.d << ',' << rec.N << ',' << rec.n << ','
       << rec.R << ',' << method_name(rec.method) << ',' << rec.rep << ','
       << fmt9(rec.width) << ','
       << (rec.error.empty() ? (rec.covered ? "1" : "0") : "") << ','
       << rec.seed << '\n';
  }
}

void write_records_jsonl(std::span<const ExperimentRecord> records,
                         std::ostream& os) {
  for (const auto& rec : records) {
    os << "{\"integrand\":\"" << json_escape(rec.integrand) << "\",\"d\":" << rec.d
       << ",\"N\":" << rec.N << ",\"n\":" << rec.n << ",\"R\":" << rec.R
       << ",\"method\":\"" << method_name(rec.method) << "\",\"rep\":" << rec.rep
       << ",\"width\":"
       << (std::isnan(rec.width) ? std::string("null") : fmt9(rec.width))
       << ",\"covered\":" << (rec.covered ? "true" : "false")
       << ",\"seed\":" << rec.seed;
    if (!rec.error.empty()) os << ",\"error\":\"" << json_escape(rec.error) << "\"";
    os << "}\n";
  }
}

void write_summary_csv(std::span<const SummaryRow> rows, std::ostream& os) {
  os << "integrand,method,N,n,mean_width,count,is_min\n";
  for (const auto& row : rows) {
    os << row.integrand << ',' << method_name(row.method) << ',' << row.N << ','
       << row.n << ',' << fmt9(row.mean_width) << ',' << row.count << ','
       << (row.min_over_n ? 1 : 0) << '\n';
  }
}

void write_ratio_csv(std::span<const RatioRecord> rows, std::ostream& os) {
  os << "integrand,N,n,R,mean_hbci_width,bennett_width,ratio\n";
  for (const auto& row : rows) {
    os << row.integrand << ',' << row.N << ',' << row.n << ',' << row.R << ','
       << fmt9(row.mean_hbci_width) << ',' << fmt9(row.bennett_width) << ','
       << fmt9(row.ratio) << '\n';
  }
}

}  // namespace rqmcbet
