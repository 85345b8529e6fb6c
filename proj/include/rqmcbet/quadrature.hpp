#pragma once

#include <functional>
#include <span>

namespace rqmcbet {

struct QuadratureResult {
  double value = 0;
  double error = 0;
  int evals = 0;
  bool converged = false;
};

// Adaptive Gauss-Kronrod integration of f over [a,b] to an absolute
// tolerance. Interior breakpoints (kinks, jumps) split the interval up
// front; the evaluation budget caps the total number of rule applications.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol,
                           std::span<const double> breakpoints = {},
                           int max_evals = 1000000);

}  // namespace rqmcbet
