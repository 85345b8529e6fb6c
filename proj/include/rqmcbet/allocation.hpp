#pragma once

#include <cstdint>
#include <functional>
#include <span>

namespace rqmcbet {

// Power-law model for the per-replicate variance: sigma^2(n) = sigma0_sq * n^-theta.
struct VarianceModel {
  double sigma0_sq = 0;
  double theta = 1;

  void validate() const;
  double operator()(double n) const;
};

// Known-variance (Bennett-style) half width for R replicates at level alpha:
// sqrt(2 sigma^2 log(2/alpha) / R) + log(2/alpha) / (3R).
double bennett_half_width(double sigma_sq, double R, double alpha);

// The same half width under the variance model with replicate size n and
// point budget N (so R = N/n), as a function of real n >= 1.
double model_half_width(double n, double N, const VarianceModel& vm, double alpha);

// Stationary point of model_half_width in n, before clamping. For theta = 1
// the half width is increasing, so the optimum is 1.
double optimal_n_unconstrained(double N, const VarianceModel& vm, double alpha);

// Unconstrained optimum clamped to [1, N].
double optimal_n_continuous(double N, const VarianceModel& vm, double alpha);

struct AllocationResult {
  double n_star = 1;            // continuous optimum, clamped to [1, N]
  std::int64_t n = 1;           // discrete choice
  double half_width = 0;        // model half width at the discrete choice
  double effective_budget = 0;  // N / log(2/alpha)
};

// Discrete optimum under the variance model: over powers of 2 up to N, or
// over floor/ceil of the continuous optimum when pow2_only is false. Ties
// resolve to the smaller n.
AllocationResult optimal_n_discrete(std::int64_t N, const VarianceModel& vm,
                                    double alpha, bool pow2_only = true);

// Discrete optimum over explicit ascending candidates with an exact
// per-replicate variance oracle. Candidates whose linear bias term alone
// exceeds the best half width so far are pruned (the term is increasing in
// n, so the scan stops there).
struct DiscreteSearchResult {
  std::int64_t n = 1;
  double half_width = 0;
};
DiscreteSearchResult optimal_n_over(std::span<const std::int64_t> candidates,
                                    std::int64_t N,
                                    const std::function<double(std::int64_t)>& sigma_sq,
                                    double alpha);

// Variance-free cap on the optimal replicate size: the optimum never exceeds
// this whatever sigma0 is, because sigma^2(1) = sigma0_sq <= 1/4 for [0,1]
// data. Returns 1 for theta = 1.
double guidance_bound(double N, double theta, double alpha);

// Half-width ratio H(n*) / H(1) at the unconstrained stationary point; a
// function of theta and the effective budget N/log(2/alpha) only.
double width_ratio(double N, const VarianceModel& vm, double alpha);

}  // namespace rqmcbet
