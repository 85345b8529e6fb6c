#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "intervals_detail.hpp"
#include "rqmcbet/intervals.hpp"

namespace rqmcbet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// psi_E(lambda) = (-log(1-lambda) - lambda) / 4, with a series expansion for
// tiny lambda where the direct form cancels.
double psi_e(double lam) {
  if (lam < 1e-4)
    return lam * lam * (0.5 + lam * (1.0 / 3.0 + lam * (0.25 + lam * 0.2))) / 4.0;
  return (-std::log1p(-lam) - lam) / 4.0;
}

int resolve_target(std::span<const double> y, const BetParams& p, const char* who) {
  const int R = p.target_R > 0 ? p.target_R : int(y.size());
  if (R < 1) throw std::invalid_argument(std::string(who) + ": R must be >= 1");
  if (std::size_t(R) > y.size())
    throw std::invalid_argument(std::string(who) +
                                ": declared R exceeds the sample size");
  return R;
}

// Predictable bet scales sqrt(2 log(2/alpha) / (R * var_{i-1})), one per
// observation; these depend on the data only, not on the candidate mean.
std::vector<double> predictable_scales(std::span<const double> y, double alpha,
                                       int R) {
  std::vector<double> lt(static_cast<std::size_t>(R));
  const double L = std::log(2.0 / alpha);
  RunningMoments mom;
  for (int i = 0; i < R; ++i) {
    lt[std::size_t(i)] = std::sqrt(2.0 * L / (double(R) * mom.var));
    mom.push(y[std::size_t(i)]);
  }
  return lt;
}

// Max over prefixes of the log hedged capital against m, stopping early once
// it exceeds stop_above.
double max_log_capital(std::span<const double> y, std::span<const double> lt,
                       double m, const BetParams& p, double stop_above) {
  const double cap_up = m > 0.0 ? p.c / m : kInf;
  const double cap_down = m < 1.0 ? p.c / (1.0 - m) : kInf;
  const double log_theta = p.theta > 0.0 ? std::log(p.theta) : -kInf;
  const double log_comp = p.theta < 1.0 ? std::log1p(-p.theta) : -kInf;
  double log_up = 0.0, log_down = 0.0, best = -kInf;
  for (std::size_t i = 0; i < lt.size(); ++i) {
    const double dev = y[i] - m;
    log_up += std::log1p(std::min(lt[i], cap_up) * dev);
    log_down += std::log1p(-std::min(lt[i], cap_down) * dev);
    const double cur = std::max(log_theta + log_up, log_comp + log_down);
    if (cur > best) {
      best = cur;
      if (best > stop_above) return best;
    }
  }
  return best;
}

}  // namespace

void RunningMoments::push(double y) {
  ++t;
  sum += y;
  mean = (0.5 + sum) / double(t + 1);
  sq_dev += (y - mean) * (y - mean);
  var = (0.25 + sq_dev) / double(t + 1);
}

void BetParams::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("BetParams: alpha must lie in (0,1)");
  if (!(c > 0.0 && c < 1.0))
    throw std::invalid_argument("BetParams: c must lie in (0,1)");
  if (!(theta >= 0.0 && theta <= 1.0))
    throw std::invalid_argument("BetParams: theta must lie in [0,1]");
  if (target_R < 0)
    throw std::invalid_argument("BetParams: target_R must be nonnegative");
  if (grid_size < 3)
    throw std::invalid_argument("BetParams: grid_size must be at least 3");
  if (!(refine_tol > 0.0))
    throw std::invalid_argument("BetParams: refine_tol must be positive");
}

Interval prpl_eb_ci(std::span<const double> y, const BetParams& p) {
  p.validate();
  const int R = resolve_target(y, p, "prpl_eb_ci");
  const auto yr = y.first(std::size_t(R));
  detail::check_unit_range(yr, "prpl_eb_ci");

  const double L = std::log(2.0 / p.alpha);
  RunningMoments mom;
  double sum_lam = 0.0, sum_lam_y = 0.0, sum_psi_nu = 0.0;
  double lo = -kInf, hi = kInf;

  Interval iv;
  iv.method = Method::ebci;
  iv.alpha = p.alpha;
  iv.R = R;
  iv.diag.steps.reserve(std::size_t(R));

  for (int i = 0; i < R; ++i) {
    const double yi = yr[std::size_t(i)];
    const double lam = std::min(std::sqrt(2.0 * L / (double(R) * mom.var)), p.c);
    const double nu = 4.0 * (yi - mom.mean) * (yi - mom.mean);
    mom.push(yi);
    sum_lam += lam;
    sum_lam_y += lam * yi;
    sum_psi_nu += nu * psi_e(lam);
    const double center = sum_lam_y / sum_lam;
    const double half = (L + sum_psi_nu) / sum_lam;
    lo = std::max(lo, center - half);
    hi = std::min(hi, center + half);
    iv.diag.steps.push_back({lam, nu, mom.mean, mom.var});
  }

  if (lo > hi) {
    if (lo - hi < 1e-12) {
      lo = hi = 0.5 * (lo + hi);
    } else {
      throw std::logic_error("prpl_eb_ci: running intersection came out empty");
    }
  }
  iv.diag.half_width_preclip = 0.5 * (hi - lo);
  iv.lo = std::clamp(lo, 0.0, 1.0);
  iv.hi = std::clamp(hi, 0.0, 1.0);
  return iv;
}

double CapitalTrace::up(std::size_t t) const { return std::exp(log_up.at(t)); }
double CapitalTrace::down(std::size_t t) const { return std::exp(log_down.at(t)); }
double CapitalTrace::hedged(std::size_t t) const {
  return std::exp(log_hedged.at(t));
}

CapitalTrace hedged_capital(std::span<const double> y, double m,
                            const BetParams& p) {
  p.validate();
  if (!(m >= 0.0 && m <= 1.0))
    throw std::invalid_argument("hedged_capital: m must lie in [0,1]");
  const int R = resolve_target(y, p, "hedged_capital");
  const auto yr = y.first(std::size_t(R));
  detail::check_unit_range(yr, "hedged_capital");

  const auto lt = predictable_scales(yr, p.alpha, R);
  const double cap_up = m > 0.0 ? p.c / m : kInf;
  const double cap_down = m < 1.0 ? p.c / (1.0 - m) : kInf;
  const double log_theta = p.theta > 0.0 ? std::log(p.theta) : -kInf;
  const double log_comp = p.theta < 1.0 ? std::log1p(-p.theta) : -kInf;

  CapitalTrace tr;
  tr.log_up.reserve(std::size_t(R));
  tr.log_down.reserve(std::size_t(R));
  tr.log_hedged.reserve(std::size_t(R));
  double log_up = 0.0, log_down = 0.0;
  for (int i = 0; i < R; ++i) {
    const double dev = yr[std::size_t(i)] - m;
    log_up += std::log1p(std::min(lt[std::size_t(i)], cap_up) * dev);
    log_down += std::log1p(-std::min(lt[std::size_t(i)], cap_down) * dev);
    const double cur = std::max(log_theta + log_up, log_comp + log_down);
    tr.log_up.push_back(log_up);
    tr.log_down.push_back(log_down);
    tr.log_hedged.push_back(cur);
    tr.max_log_hedged = std::max(tr.max_log_hedged, cur);
  }
  return tr;
}

Interval hbci(std::span<const double> y, const BetParams& p) {
  p.validate();
  const int R = resolve_target(y, p, "hbci");
  const auto yr = y.first(std::size_t(R));
  detail::check_unit_range(yr, "hbci");

  const auto lt = predictable_scales(yr, p.alpha, R);
  const double threshold = std::log(1.0 / p.alpha);
  const int G = p.grid_size;
  const auto grid_m = [G](int g) { return double(g) / double(G - 1); };
  const auto rejects = [&](double m) {
    return max_log_capital(yr, lt, m, p, threshold) > threshold;
  };

  std::vector<bool> accepted(static_cast<std::size_t>(G));
  int first_acc = -1, last_acc = -1;
  for (int g = 0; g < G; ++g) {
    const bool acc = !rejects(grid_m(g));
    accepted[std::size_t(g)] = acc;
    if (acc) {
      if (first_acc < 0) first_acc = g;
      last_acc = g;
    }
  }
  const double mbar = detail::sample_mean(yr);
  const bool mean_acc = !rejects(mbar);

  Interval iv;
  iv.method = Method::hbci;
  iv.alpha = p.alpha;
  iv.R = R;
  iv.diag.grid_size = G;

  if (first_acc < 0 && !mean_acc) {
    // Nothing survives at grid resolution: report the least-rejected point.
    double best_m = mbar, best_log = max_log_capital(yr, lt, mbar, p, kInf);
    for (int g = 0; g < G; ++g) {
      const double cur = max_log_capital(yr, lt, grid_m(g), p, kInf);
      if (cur < best_log) {
        best_log = cur;
        best_m = grid_m(g);
      }
    }
    iv.lo = iv.hi = best_m;
    iv.diag.degenerate = true;
    iv.diag.half_width_preclip = 0.0;
    return iv;
  }

  for (int g = first_acc; first_acc >= 0 && g <= last_acc; ++g) {
    if (!accepted[std::size_t(g)]) {
      iv.diag.noncontiguous = true;
      break;
    }
  }

  double acc_lo = first_acc >= 0 ? grid_m(first_acc) : kInf;
  double acc_hi = last_acc >= 0 ? grid_m(last_acc) : -kInf;
  if (mean_acc) {
    acc_lo = std::min(acc_lo, mbar);
    acc_hi = std::max(acc_hi, mbar);
  }

  // Sharpen each boundary by bisection, keeping the rejected-side endpoint.
  if (acc_lo <= 0.0) {
    iv.lo = 0.0;
  } else {
    double left = grid_m(int(std::floor(acc_lo * double(G - 1) - 1e-9)));
    double right = acc_lo;
    while (right - left > p.refine_tol) {
      const double mid = 0.5 * (left + right);
      if (rejects(mid))
        left = mid;
      else
        right = mid;
    }
    iv.lo = left;
  }
  if (acc_hi >= 1.0) {
    iv.hi = 1.0;
  } else {
    double left = acc_hi;
    double right = grid_m(int(std::ceil(acc_hi * double(G - 1) + 1e-9)));
    while (right - left > p.refine_tol) {
      const double mid = 0.5 * (left + right);
      if (rejects(mid))
        right = mid;
      else
        left = mid;
    }
    iv.hi = right;
  }
  iv.diag.half_width_preclip = 0.5 * (iv.hi - iv.lo);
  return iv;
}

}  // namespace rqmcbet
