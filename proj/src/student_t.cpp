#include "rqmcbet/student_t.hpp"

#include <cmath>
#include <stdexcept>

namespace rqmcbet {

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 400;
  constexpr double kEps = 3e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw std::runtime_error("incomplete_beta: continued fraction did not converge");
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0 && b > 0.0))
    throw std::domain_error("incomplete_beta: a and b must be positive");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_cdf(double x, double nu) {
  if (!(nu > 0.0)) throw std::domain_error("student_t_cdf: nu must be positive");
  if (x == 0.0) return 0.5;
  const double w = nu / (nu + x * x);
  const double half_tail = 0.5 * incomplete_beta(0.5 * nu, 0.5, w);
  return x > 0.0 ? 1.0 - half_tail : half_tail;
}

double t_quantile(double p, double nu) {
  if (!(nu > 0.0)) throw std::domain_error("t_quantile: nu must be positive");
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("t_quantile: p must lie strictly inside (0,1)");
  if (p == 0.5) return 0.0;
  if (p < 0.5) return -t_quantile(1.0 - p, nu);

  constexpr double kTol = 1e-12;
  double lo = 0.0, flo = 0.5 - p;
  double hi = 2.0;
  double fhi = student_t_cdf(hi, nu) - p;
  while (fhi < 0.0) {
    lo = hi;
    flo = fhi;
    hi *= 2.0;
    if (hi > 1e300) throw std::runtime_error("t_quantile: bracket expansion failed");
    fhi = student_t_cdf(hi, nu) - p;
  }

  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 300; ++it) {
    // Secant proposal, safeguarded by the bracket.
    double cand = hi - fhi * (hi - lo) / (fhi - flo);
    if (!(cand > lo && cand < hi)) cand = 0.5 * (lo + hi);
    const double fc = student_t_cdf(cand, nu) - p;
    x = cand;
    if (std::fabs(fc) <= kTol) return x;
    if (fc < 0.0) {
      lo = cand;
      flo = fc;
    } else {
      hi = cand;
      fhi = fc;
    }
    if (hi - lo <= 1e-14 * std::max(1.0, hi)) break;
  }
  return x;
}

}  // namespace rqmcbet
