#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rqmcbet/replicates.hpp"
#include "rqmcbet/stratified_variance.hpp"

using namespace rqmcbet;

namespace {

const Integrand kIndicatorThird = [](std::span<const double> x) {
  return x[0] < 1.0 / 3.0 ? 1.0 : 0.0;
};

const Integrand kSmooth = [](std::span<const double> x) {
  return x[0] * std::exp(x[0] - 1.0);
};

struct Moments {
  double mean, var, m4;
};

Moments sample_moments(const std::vector<double>& y) {
  const double R = double(y.size());
  double m = 0;
  for (double v : y) m += v;
  m /= R;
  double s2 = 0, s4 = 0;
  for (double v : y) {
    const double d2 = (v - m) * (v - m);
    s2 += d2;
    s4 += d2 * d2;
  }
  return {m, s2 / (R - 1.0), s4 / R};
}

}  // namespace

TEST_SUITE("replicates") {

TEST_CASE("replicate means are unbiased for the indicator integrand") {
  const int R = 4096;
  const ReplicateSample s = replicate_estimates(kIndicatorThird, 1, 4, R, 11);
  CHECK_EQ(s.R(), R);
  CHECK_EQ(s.n, 4);
  CHECK_EQ(s.d, 1);
  // SE = sqrt(2/(9*16)/R) ~ 0.00184; allow four standard errors.
  CHECK(std::abs(s.mean() - 1.0 / 3.0) < 4.0 * std::sqrt(2.0 / 144.0 / R));
}

TEST_CASE("replicate variance matches the stratified oracle") {
  // The scrambled net over [0,1) with n=2^k points is a stratified sample
  // at that resolution, so the replicate-mean variance has a closed form.
  const int R = 20000;
  for (const std::int64_t n : {std::int64_t(2), std::int64_t(4), std::int64_t(8)}) {
    ReplicateSample ind = replicate_estimates(kIndicatorThird, 1, n, R, 31 + n);
    ReplicateSample smo = replicate_estimates(kSmooth, 1, n, R, 47 + n);
    const Moments mi = sample_moments(ind.y);
    const Moments ms = sample_moments(smo.y);
    // Standard error of a sample variance: sqrt((m4 - var^2)/R).
    const double se_i = std::sqrt((mi.m4 - mi.var * mi.var) / double(R));
    const double se_s = std::sqrt((ms.m4 - ms.var * ms.var) / double(R));
    CHECK(std::abs(mi.var - var_indicator_third(n)) < 5.0 * se_i);
    CHECK(std::abs(ms.var - var_smooth_exact(n)) < 5.0 * se_s);
  }
}

TEST_CASE("same seed reproduces the sample, different seeds do not") {
  const ReplicateSample a = replicate_estimates(kSmooth, 1, 8, 32, 5, "s");
  const ReplicateSample b = replicate_estimates(kSmooth, 1, 8, 32, 5, "s");
  const ReplicateSample c = replicate_estimates(kSmooth, 1, 8, 32, 6, "s");
  CHECK_EQ(a.y, b.y);
  CHECK(a.y != c.y);
  CHECK_EQ(a.integrand_id, "s");
  CHECK_EQ(a.seed, 5u);
}

TEST_CASE("replicates behave as independent draws") {
  const int R = 4096;
  const ReplicateSample s = replicate_estimates(kSmooth, 1, 2, R, 13);
  const Moments m = sample_moments(s.y);
  double lag1 = 0;
  for (int r = 0; r + 1 < R; ++r)
    lag1 += (s.y[std::size_t(r)] - m.mean) * (s.y[std::size_t(r) + 1] - m.mean);
  lag1 /= double(R - 1) * m.var;
  CHECK(std::abs(lag1) < 4.0 / std::sqrt(double(R)));
}

TEST_CASE("tiny excursions clamp, real ones throw") {
  const Integrand barely = [](std::span<const double>) { return 1.0 + 5e-13; };
  const ReplicateSample s = replicate_estimates(barely, 1, 2, 3, 1);
  for (double v : s.y) CHECK_EQ(v, 1.0);

  const Integrand outside = [](std::span<const double>) { return 1.1; };
  CHECK_THROWS_AS(replicate_estimates(outside, 1, 2, 3, 1), std::domain_error);
  const Integrand negative = [](std::span<const double>) { return -0.5; };
  CHECK_THROWS_AS(replicate_estimates(negative, 1, 2, 3, 1), std::domain_error);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(replicate_estimates(kSmooth, 1, 3, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(replicate_estimates(kSmooth, 1, 0, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(replicate_estimates(kSmooth, 0, 4, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(replicate_estimates(kSmooth, 1, 4, 0, 1), std::invalid_argument);
}

TEST_CASE("all replicate means stay inside the unit interval") {
  const ReplicateSample s = replicate_estimates(kIndicatorThird, 1, 1, 512, 3);
  for (double v : s.y) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

}  // TEST_SUITE
