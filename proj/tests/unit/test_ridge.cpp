#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rqmcbet/normal.hpp"
#include "rqmcbet/quadrature.hpp"
#include "rqmcbet/replicates.hpp"
#include "rqmcbet/ridge.hpp"

using namespace rqmcbet;

TEST_SUITE("ridge") {

TEST_CASE("profile anchors") {
  // Step at v = 1.
  CHECK_EQ(ridge_g(RidgeKind::jump, 0.999), 0.0);
  CHECK_EQ(ridge_g(RidgeKind::jump, 1.0), 1.0);
  CHECK_EQ(ridge_g(RidgeKind::jump, 3.0), 1.0);
  // Piecewise-linear ramp (clamp(v,-2,1)+2)/3.
  CHECK_EQ(ridge_g(RidgeKind::kink, -3.0), 0.0);
  CHECK_EQ(ridge_g(RidgeKind::kink, -2.0), 0.0);
  CHECK(ridge_g(RidgeKind::kink, 0.0) == doctest::Approx(2.0 / 3.0));
  CHECK_EQ(ridge_g(RidgeKind::kink, 1.0), 1.0);
  CHECK_EQ(ridge_g(RidgeKind::kink, 2.5), 1.0);
  // Shifted normal CDF.
  CHECK(ridge_g(RidgeKind::smooth, -1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(ridge_g(RidgeKind::smooth, 0.0) ==
        doctest::Approx(phi(1.0)).epsilon(1e-15));
  // Capped square-root payoff min(1, sqrt(max(v+2,0))/2).
  CHECK_EQ(ridge_g(RidgeKind::finance, -2.5), 0.0);
  CHECK_EQ(ridge_g(RidgeKind::finance, -2.0), 0.0);
  CHECK(ridge_g(RidgeKind::finance, -1.0) == doctest::Approx(0.5));
  CHECK_EQ(ridge_g(RidgeKind::finance, 2.0), 1.0);
  CHECK_EQ(ridge_g(RidgeKind::finance, 7.0), 1.0);
}

TEST_CASE("profiles stay inside the unit interval") {
  for (const RidgeKind k : {RidgeKind::jump, RidgeKind::kink, RidgeKind::smooth,
                            RidgeKind::finance}) {
    for (double v = -8.0; v <= 8.0; v += 1.0 / 64.0) {
      const double g = ridge_g(k, v);
      CHECK(g >= 0.0);
      CHECK(g <= 1.0);
    }
  }
}

TEST_CASE("ridge evaluation reduces to the profile in one dimension") {
  for (const double u : {0.1, 0.3, 0.5, 0.9}) {
    const std::vector<double> x{u};
    CHECK(eval_ridge(RidgeKind::smooth, x) ==
          doctest::Approx(ridge_g(RidgeKind::smooth, phi_inv(u))).epsilon(1e-14));
  }
}

TEST_CASE("the normal projection is exchangeable across coordinates") {
  const std::vector<double> x{0.12, 0.97, 0.44, 0.71};
  const std::vector<double> perm{0.71, 0.12, 0.97, 0.44};
  CHECK(eval_ridge(RidgeKind::finance, x) ==
        doctest::Approx(eval_ridge(RidgeKind::finance, perm)).epsilon(1e-14));
  // v = sum phi_inv(x_j) / sqrt(d) directly.
  double v = 0;
  for (const double u : x) v += phi_inv(u);
  v /= 2.0;
  CHECK(eval_ridge(RidgeKind::kink, x) ==
        doctest::Approx(ridge_g(RidgeKind::kink, v)).epsilon(1e-14));
}

TEST_CASE("evaluation rejects boundary and empty points") {
  const std::vector<double> at_zero{0.5, 0.0};
  CHECK_THROWS_AS(eval_ridge(RidgeKind::jump, at_zero), std::domain_error);
  const std::vector<double> at_one{1.0};
  CHECK_THROWS_AS(eval_ridge(RidgeKind::jump, at_one), std::domain_error);
  const std::vector<double> empty;
  CHECK_THROWS_AS(eval_ridge(RidgeKind::jump, empty), std::invalid_argument);
}

TEST_CASE("true means: closed forms") {
  CHECK(ridge_true_mean(RidgeKind::jump) ==
        doctest::Approx(1.0 - phi(1.0)).epsilon(1e-15));
  CHECK(ridge_true_mean(RidgeKind::jump) ==
        doctest::Approx(0.15865525393145707).epsilon(1e-14));
  CHECK(ridge_true_mean(RidgeKind::smooth) ==
        doctest::Approx(phi(1.0 / std::sqrt(2.0))).epsilon(1e-14));
  CHECK(ridge_true_mean(RidgeKind::smooth) ==
        doctest::Approx(0.7602499389065233).epsilon(1e-14));
}

TEST_CASE("true means: quadrature profiles against independent reductions") {
  // E[(clamp(Z,-2,1)+2)/3] = (pdf(-2)-pdf(1))/3 + (2/3)(Phi(1)-Phi(-2))
  //                          + (1-Phi(1)), using E[Z 1{a<Z<b}] = pdf(a)-pdf(b).
  const double kink_expect = (phi_pdf(-2.0) - phi_pdf(1.0)) / 3.0 +
                             (2.0 / 3.0) * (phi(1.0) - phi(-2.0)) +
                             (1.0 - phi(1.0));
  CHECK(ridge_true_mean(RidgeKind::kink) ==
        doctest::Approx(kink_expect).epsilon(1e-9));
  CHECK(ridge_true_mean(RidgeKind::kink) ==
        doctest::Approx(0.6417250773430478).epsilon(1e-7));

  // E[min(1, sqrt(Z+2)/2)] = int_{-2}^{2} sqrt(z+2)/2 pdf(z) dz + (1-Phi(2)).
  const QuadratureResult body = integrate(
      [](double z) { return 0.5 * std::sqrt(z + 2.0) * phi_pdf(z); }, -2.0,
      2.0, 1e-11);
  REQUIRE(body.converged);
  const double fin_expect = body.value + 1.0 - phi(2.0);
  CHECK(ridge_true_mean(RidgeKind::finance) ==
        doctest::Approx(fin_expect).epsilon(1e-8));
  CHECK(ridge_true_mean(RidgeKind::finance) ==
        doctest::Approx(0.6772995069448834).epsilon(1e-7));
}

TEST_CASE("names round trip") {
  for (const RidgeKind k : {RidgeKind::jump, RidgeKind::kink, RidgeKind::smooth,
                            RidgeKind::finance}) {
    CHECK_EQ(ridge_kind_from_name(ridge_kind_name(k)), k);
  }
  CHECK_THROWS_AS(ridge_kind_from_name("lognormal"), std::invalid_argument);
}

TEST_CASE("scrambled-net replicates estimate the jump mean") {
  const auto f = [](std::span<const double> x) {
    return eval_ridge(RidgeKind::jump, x);
  };
  const ReplicateSample s = replicate_estimates(f, 2, 1024, 8, 20260815);
  double mean = 0;
  for (const double y : s.y) mean += y;
  mean /= double(s.y.size());
  CHECK(mean == doctest::Approx(1.0 - phi(1.0)).epsilon(0.12));
}

}  // TEST_SUITE
