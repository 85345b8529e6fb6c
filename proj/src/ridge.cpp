#include "rqmcbet/ridge.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rqmcbet/normal.hpp"
#include "rqmcbet/quadrature.hpp"

namespace rqmcbet {

RidgeKind ridge_kind_from_name(std::string_view name) {
  if (name == "jump") return RidgeKind::jump;
  if (name == "kink") return RidgeKind::kink;
  if (name == "smooth") return RidgeKind::smooth;
  if (name == "finance") return RidgeKind::finance;
  throw std::invalid_argument("unknown ridge integrand: " + std::string(name));
}

std::string_view ridge_kind_name(RidgeKind k) {
  switch (k) {
    case RidgeKind::jump: return "jump";
    case RidgeKind::kink: return "kink";
    case RidgeKind::smooth: return "smooth";
    case RidgeKind::finance: return "finance";
  }
  throw std::logic_error("ridge_kind_name: unknown kind");
}

double ridge_g(RidgeKind k, double v) {
  switch (k) {
    case RidgeKind::jump:
      return v >= 1.0 ? 1.0 : 0.0;
    case RidgeKind::kink:
      return (std::clamp(v, -2.0, 1.0) + 2.0) / 3.0;
    case RidgeKind::smooth:
      return phi(v + 1.0);
    case RidgeKind::finance:
      return std::min(1.0, std::sqrt(std::max(v + 2.0, 0.0)) / 2.0);
  }
  throw std::logic_error("ridge_g: unknown kind");
}

double eval_ridge(RidgeKind k, std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("eval_ridge: empty point");
  double v = 0;
  for (const double xj : x) {
    if (!(xj > 0.0 && xj < 1.0))
      throw std::domain_error(
          "eval_ridge: coordinates must lie strictly inside (0,1)");
    v += phi_inv(xj);
  }
  return ridge_g(k, v / std::sqrt(double(x.size())));
}

namespace {

double mean_by_quadrature(RidgeKind k, std::span<const double> breakpoints) {
  const auto integrand = [k](double z) { return ridge_g(k, z) * phi_pdf(z); };
  const QuadratureResult q = integrate(integrand, -10.0, 10.0, 1e-10, breakpoints);
  if (!q.converged)
    throw std::runtime_error("ridge_true_mean: quadrature did not converge");
  return q.value;
}

}  // namespace

double ridge_true_mean(RidgeKind k) {
  switch (k) {
    case RidgeKind::jump:
      return 1.0 - phi(1.0);
    case RidgeKind::smooth:
      // E[phi(Z + 1)] = P(Z' - Z <= 1) with Z' - Z ~ N(0, 2).
      return phi(1.0 / std::sqrt(2.0));
    case RidgeKind::kink: {
      static const double cached =
          mean_by_quadrature(RidgeKind::kink, std::array{-2.0, 1.0});
      return cached;
    }
    case RidgeKind::finance: {
      static const double cached =
          mean_by_quadrature(RidgeKind::finance, std::array{-2.0, 2.0});
      return cached;
    }
  }
  throw std::logic_error("ridge_true_mean: unknown kind");
}

}  // namespace rqmcbet
