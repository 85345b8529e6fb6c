#pragma once

#include <cstdint>
#include <functional>
#include <span>

namespace rqmcbet {

// Exact variance of the stratified estimator that averages one uniform draw
// from each of n equal subintervals of [0,1].

// f(x) = 1{x < 1/3}: the only contributing stratum is the one containing
// 1/3, giving exactly 2 / (9 n^2) whenever 3 does not divide n.
double var_indicator_third(std::int64_t n);

// f(x) = x e^(x-1), via closed-form antiderivatives of f and f^2.
double var_smooth_exact(std::int64_t n);

// Same quantity for an arbitrary integrand by adaptive quadrature of f and
// f^2 on every stratum; breakpoints mark known kinks or jumps of f.
double var_stratified_numeric(const std::function<double(double)>& f,
                              std::int64_t n, double tol,
                              std::span<const double> breakpoints = {});

}  // namespace rqmcbet
