#pragma once

namespace rqmcbet {

// Regularized incomplete beta function I_x(a,b), continued-fraction form.
double incomplete_beta(double a, double b, double x);

// Student-t distribution with nu > 0 degrees of freedom.
double student_t_cdf(double x, double nu);

// Quantile by safeguarded bisection/secant inversion of the CDF; the result
// satisfies |student_t_cdf(t, nu) - p| <= 1e-10.
double t_quantile(double p, double nu);

}  // namespace rqmcbet
