#include "rqmcbet/stratified_variance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rqmcbet/quadrature.hpp"

namespace rqmcbet {

namespace {

void check_n(std::int64_t n, const char* who) {
  if (n < 1)
    throw std::invalid_argument(std::string(who) + ": n must be at least 1");
}

// Antiderivative of x e^(x-1).
double F_smooth(double x) { return (x - 1.0) * std::exp(x - 1.0); }

// Antiderivative of (x e^(x-1))^2 = x^2 e^(2x-2).
double G_smooth(double x) {
  return std::exp(2.0 * x - 2.0) * (0.5 * x * x - 0.5 * x + 0.25);
}

}  // namespace

double var_indicator_third(std::int64_t n) {
  check_n(n, "var_indicator_third");
  if (n % 3 == 0)
    throw std::invalid_argument(
        "var_indicator_third: n divisible by 3 puts the jump on a stratum "
        "edge; the 2/(9 n^2) form does not apply");
  return 2.0 / (9.0 * double(n) * double(n));
}

double var_smooth_exact(std::int64_t n) {
  check_n(n, "var_smooth_exact");
  const double nd = double(n);
  double total = 0;
  for (std::int64_t l = 1; l <= n; ++l) {
    const double a = double(l - 1) / nd;
    const double b = double(l) / nd;
    const double mean_l = nd * (F_smooth(b) - F_smooth(a));
    const double m2_l = nd * (G_smooth(b) - G_smooth(a));
    total += m2_l - mean_l * mean_l;
  }
  return total / (nd * nd);
}

double var_stratified_numeric(const std::function<double(double)>& f,
                              std::int64_t n, double tol,
                              std::span<const double> breakpoints) {
  check_n(n, "var_stratified_numeric");
  if (!(tol > 0.0))
    throw std::invalid_argument("var_stratified_numeric: tol must be positive");
  const double nd = double(n);
  const auto f2 = [&f](double x) {
    const double v = f(x);
    return v * v;
  };
  double total = 0;
  for (std::int64_t l = 1; l <= n; ++l) {
    const double a = double(l - 1) / nd;
    const double b = double(l) / nd;
    const QuadratureResult i1 = integrate(f, a, b, tol, breakpoints);
    const QuadratureResult i2 = integrate(f2, a, b, tol, breakpoints);
    if (!i1.converged || !i2.converged)
      throw std::runtime_error(
          "var_stratified_numeric: quadrature did not reach the requested "
          "tolerance within its evaluation budget");
    const double mean_l = nd * i1.value;
    const double m2_l = nd * i2.value;
    total += m2_l - mean_l * mean_l;
  }
  return total / (nd * nd);
}

}  // namespace rqmcbet
