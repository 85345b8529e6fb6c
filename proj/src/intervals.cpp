#include "rqmcbet/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "intervals_detail.hpp"
#include "rqmcbet/student_t.hpp"

namespace rqmcbet {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::hoeffding: return "hoeffding";
    case Method::bennett: return "bennett";
    case Method::maurer_pontil: return "maurer_pontil";
    case Method::clt: return "clt";
    case Method::ebci: return "ebci";
    case Method::hbci: return "hbci";
  }
  throw std::logic_error("method_name: unknown method");
}

Method method_from_name(std::string_view name) {
  if (name == "hoeffding") return Method::hoeffding;
  if (name == "bennett") return Method::bennett;
  if (name == "maurer_pontil" || name == "maurer-pontil" || name == "mp")
    return Method::maurer_pontil;
  if (name == "clt" || name == "student-t") return Method::clt;
  if (name == "ebci" || name == "prpl-eb") return Method::ebci;
  if (name == "hbci") return Method::hbci;
  throw std::invalid_argument("unknown interval method: " + std::string(name));
}

namespace detail {

void check_unit_range(std::span<const double> y, const char* who) {
  for (double v : y)
    if (!(v >= 0.0 && v <= 1.0))
      throw std::domain_error(std::string(who) + ": data outside [0,1]");
}

double sample_mean(std::span<const double> y) {
  double s = 0;
  for (double v : y) s += v;
  return s / double(y.size());
}

// Unbiased sample variance (denominator R-1).
double sample_var(std::span<const double> y, double mean) {
  double s = 0;
  for (double v : y) s += (v - mean) * (v - mean);
  return s / double(y.size() - 1);
}

Interval clipped(Method m, double alpha, double center, double half,
                 std::size_t R) {
  Interval iv;
  iv.method = m;
  iv.alpha = alpha;
  iv.R = int(R);
  iv.diag.half_width_preclip = half;
  iv.lo = std::max(0.0, center - half);
  iv.hi = std::min(1.0, center + half);
  return iv;
}

void check_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument(std::string(who) + ": alpha must lie in (0,1)");
}

}  // namespace detail

Interval hoeffding_ci(std::span<const double> y, double alpha) {
  detail::check_alpha(alpha, "hoeffding_ci");
  if (y.empty()) throw std::invalid_argument("hoeffding_ci: empty sample");
  detail::check_unit_range(y, "hoeffding_ci");
  const double R = double(y.size());
  const double half = std::sqrt(std::log(2.0 / alpha) / (2.0 * R));
  return detail::clipped(Method::hoeffding, alpha, detail::sample_mean(y), half,
                         y.size());
}

Interval bennett_ci(std::span<const double> y, double sigma_sq, double alpha) {
  detail::check_alpha(alpha, "bennett_ci");
  if (y.empty()) throw std::invalid_argument("bennett_ci: empty sample");
  if (!(sigma_sq >= 0.0))
    throw std::invalid_argument("bennett_ci: sigma_sq must be nonnegative");
  detail::check_unit_range(y, "bennett_ci");
  const double R = double(y.size());
  const double L = std::log(2.0 / alpha);
  const double half = std::sqrt(2.0 * sigma_sq * L / R) + L / (3.0 * R);
  return detail::clipped(Method::bennett, alpha, detail::sample_mean(y), half,
                         y.size());
}

Interval maurer_pontil_ci(std::span<const double> y, double alpha) {
  detail::check_alpha(alpha, "maurer_pontil_ci");
  if (y.size() < 2)
    throw std::invalid_argument("maurer_pontil_ci: needs at least two values");
  detail::check_unit_range(y, "maurer_pontil_ci");
  const double R = double(y.size());
  const double mean = detail::sample_mean(y);
  const double s2 = detail::sample_var(y, mean);
  const double L = std::log(4.0 / alpha);
  const double half = std::sqrt(2.0 * s2 * L / R) + 7.0 * L / (3.0 * (R - 1.0));
  return detail::clipped(Method::maurer_pontil, alpha, mean, half, y.size());
}

Interval clt_ci(std::span<const double> y, double alpha) {
  detail::check_alpha(alpha, "clt_ci");
  if (y.size() < 2)
    throw std::invalid_argument("clt_ci: needs at least two values");
  detail::check_unit_range(y, "clt_ci");
  const double R = double(y.size());
  const double mean = detail::sample_mean(y);
  const double s = std::sqrt(detail::sample_var(y, mean));
  const double q = t_quantile(1.0 - 0.5 * alpha, R - 1.0);
  const double half = s * q / std::sqrt(R);
  return detail::clipped(Method::clt, alpha, mean, half, y.size());
}

}  // namespace rqmcbet
