#include "rqmcbet/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace rqmcbet {

namespace {

void check_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument(std::string(who) + ": alpha must lie in (0,1)");
}

void check_budget(double N, const char* who) {
  if (!(N >= 1.0))
    throw std::invalid_argument(std::string(who) + ": N must be at least 1");
}

}  // namespace

void VarianceModel::validate() const {
  if (!(sigma0_sq > 0.0))
    throw std::invalid_argument("VarianceModel: sigma0_sq must be positive");
  if (!(theta >= 1.0))
    throw std::invalid_argument("VarianceModel: theta must be at least 1");
}

double VarianceModel::operator()(double n) const {
  return sigma0_sq * std::pow(n, -theta);
}

double bennett_half_width(double sigma_sq, double R, double alpha) {
  check_alpha(alpha, "bennett_half_width");
  if (!(R >= 1.0))
    throw std::invalid_argument("bennett_half_width: R must be at least 1");
  if (!(sigma_sq >= 0.0))
    throw std::invalid_argument("bennett_half_width: sigma_sq must be nonnegative");
  const double L = std::log(2.0 / alpha);
  return std::sqrt(2.0 * sigma_sq * L / R) + L / (3.0 * R);
}

double model_half_width(double n, double N, const VarianceModel& vm, double alpha) {
  vm.validate();
  check_alpha(alpha, "model_half_width");
  check_budget(N, "model_half_width");
  if (!(n >= 1.0))
    throw std::invalid_argument("model_half_width: n must be at least 1");
  const double L = std::log(2.0 / alpha);
  return std::sqrt(vm.sigma0_sq) * std::pow(n, 0.5 * (1.0 - vm.theta)) *
             std::sqrt(2.0 * L / N) +
         (L / 3.0) * (n / N);
}

double optimal_n_unconstrained(double N, const VarianceModel& vm, double alpha) {
  vm.validate();
  check_alpha(alpha, "optimal_n_unconstrained");
  check_budget(N, "optimal_n_unconstrained");
  if (vm.theta == 1.0) return 1.0;
  const double L = std::log(2.0 / alpha);
  const double t1 = vm.theta - 1.0;
  return std::pow(9.0 * t1 * t1 * vm.sigma0_sq * N / (2.0 * L),
                  1.0 / (vm.theta + 1.0));
}

double optimal_n_continuous(double N, const VarianceModel& vm, double alpha) {
  return std::clamp(optimal_n_unconstrained(N, vm, alpha), 1.0, N);
}

AllocationResult optimal_n_discrete(std::int64_t N, const VarianceModel& vm,
                                    double alpha, bool pow2_only) {
  if (N < 1) throw std::invalid_argument("optimal_n_discrete: N must be >= 1");
  AllocationResult res;
  res.n_star = optimal_n_continuous(double(N), vm, alpha);
  res.effective_budget = double(N) / std::log(2.0 / alpha);

  std::vector<std::int64_t> candidates;
  if (pow2_only) {
    for (std::int64_t n = 1; n <= N; n *= 2) {
      candidates.push_back(n);
      if (n > N / 2) break;
    }
  } else {
    const auto lo = std::int64_t(std::floor(res.n_star));
    const auto hi = std::int64_t(std::ceil(res.n_star));
    candidates.push_back(std::clamp<std::int64_t>(lo, 1, N));
    if (hi != lo) candidates.push_back(std::clamp<std::int64_t>(hi, 1, N));
  }

  double best = std::numeric_limits<double>::infinity();
  for (const std::int64_t n : candidates) {
    const double h = model_half_width(double(n), double(N), vm, alpha);
    if (h < best) {
      best = h;
      res.n = n;
    }
  }
  res.half_width = best;
  return res;
}

DiscreteSearchResult optimal_n_over(std::span<const std::int64_t> candidates,
                                    std::int64_t N,
                                    const std::function<double(std::int64_t)>& sigma_sq,
                                    double alpha) {
  check_alpha(alpha, "optimal_n_over");
  if (candidates.empty())
    throw std::invalid_argument("optimal_n_over: empty candidate set");
  if (!std::is_sorted(candidates.begin(), candidates.end()))
    throw std::invalid_argument("optimal_n_over: candidates must be ascending");
  const double L = std::log(2.0 / alpha);
  DiscreteSearchResult res{0, std::numeric_limits<double>::infinity()};
  for (const std::int64_t n : candidates) {
    if (n < 1 || n > N)
      throw std::invalid_argument("optimal_n_over: candidate outside [1, N]");
    const double bias = (L / 3.0) * (double(n) / double(N));
    if (bias > res.half_width) break;
    const double R = double(N) / double(n);
    const double h = std::sqrt(2.0 * sigma_sq(n) * L / R) + L / (3.0 * R);
    if (h < res.half_width) {
      res.half_width = h;
      res.n = n;
    }
  }
  return res;
}

double guidance_bound(double N, double theta, double alpha) {
  check_alpha(alpha, "guidance_bound");
  check_budget(N, "guidance_bound");
  if (!(theta >= 1.0))
    throw std::invalid_argument("guidance_bound: theta must be at least 1");
  if (theta == 1.0) return 1.0;
  const double L = std::log(2.0 / alpha);
  const double t1 = theta - 1.0;
  return std::pow(9.0 * t1 * t1 * N / (8.0 * L), 1.0 / (theta + 1.0));
}

double width_ratio(double N, const VarianceModel& vm, double alpha) {
  vm.validate();
  check_alpha(alpha, "width_ratio");
  check_budget(N, "width_ratio");
  if (vm.theta == 1.0) return 1.0;
  const double L = std::log(2.0 / alpha);
  const double na = N / L;
  const double t1 = vm.theta - 1.0;
  return (vm.theta + 1.0) / (std::sqrt(2.0 * vm.sigma0_sq * na) + 1.0 / 3.0) *
         std::pow(0.5 * std::pow(3.0 * t1, 1.0 - vm.theta) * na * vm.sigma0_sq,
                  1.0 / (vm.theta + 1.0));
}

}  // namespace rqmcbet
