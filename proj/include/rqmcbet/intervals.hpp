#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace rqmcbet {

enum class Method { hoeffding, bennett, maurer_pontil, clt, ebci, hbci };

std::string_view method_name(Method m);
Method method_from_name(std::string_view name);

struct PrplStep {
  double lambda;  // bet size used for this observation
  double nu;      // 4 (y_i - mean_{i-1})^2
  double mean;    // plug-in mean after the observation
  double var;     // plug-in variance after the observation
};

struct IntervalDiagnostics {
  double half_width_preclip = std::numeric_limits<double>::quiet_NaN();
  // Betting-interval extras.
  int grid_size = 0;
  bool noncontiguous = false;
  bool degenerate = false;
  std::vector<PrplStep> steps;
};

struct Interval {
  Method method{};
  double alpha = 0;
  double lo = 0;
  double hi = 1;
  std::int64_t n = 0;  // points per replicate when known, 0 otherwise
  int R = 0;
  IntervalDiagnostics diag;

  double width() const { return hi - lo; }
  bool contains(double m) const { return lo <= m && m <= hi; }
};

// Plug-in moment estimates with proper priors: before any data the mean is
// 1/2 and the variance 1/4; both stay strictly inside their ranges forever.
struct RunningMoments {
  std::int64_t t = 0;
  double sum = 0;
  double sq_dev = 0;  // accumulated (y_i - mean_i)^2
  double mean = 0.5;
  double var = 0.25;

  void push(double y);
};

// Parameters shared by the betting-style intervals.
struct BetParams {
  double alpha = 0.05;
  double c = 0.5;        // bet truncation level, in (0,1)
  double theta = 0.5;    // hedge weight on the upward capital, in [0,1]
  int target_R = 0;      // declared replicate count; 0 means the sample size
  int grid_size = (1 << 12) + 1;
  double refine_tol = 1e-6;

  void validate() const;
};

// Fixed-width bounds for means of [0,1] data.
Interval hoeffding_ci(std::span<const double> y, double alpha);
Interval bennett_ci(std::span<const double> y, double sigma_sq, double alpha);
Interval maurer_pontil_ci(std::span<const double> y, double alpha);
Interval clt_ci(std::span<const double> y, double alpha);

// Empirical-Bernstein interval with predictable plug-in bets, reported as
// the running intersection over sample prefixes.
Interval prpl_eb_ci(std::span<const double> y, const BetParams& p);

// Hedged betting capital against a candidate mean m; all capitals are kept
// in log space (they are strictly positive whenever c < 1).
struct CapitalTrace {
  std::vector<double> log_up;      // log K_t^+
  std::vector<double> log_down;    // log K_t^-
  std::vector<double> log_hedged;  // log max(theta K^+, (1-theta) K^-)
  double max_log_hedged = -std::numeric_limits<double>::infinity();

  double up(std::size_t t) const;
  double down(std::size_t t) const;
  double hedged(std::size_t t) const;
};

CapitalTrace hedged_capital(std::span<const double> y, double m, const BetParams& p);

// Betting confidence interval: the hull of candidate means whose hedged
// capital never exceeds 1/alpha, scanned on an equispaced grid over [0,1]
// (endpoints and the sample mean included) and sharpened by bisection.
Interval hbci(std::span<const double> y, const BetParams& p);

}  // namespace rqmcbet
