#include <cmath>
#include <vector>

#include "doctest.h"
#include "rqmcbet/normal.hpp"
#include "rqmcbet/student_t.hpp"

using namespace rqmcbet;

TEST_SUITE("special") {

TEST_CASE("normal cdf anchors") {
  CHECK_EQ(phi(0.0), 0.5);
  CHECK(phi(1.0) == doctest::Approx(0.8413447460685429).epsilon(1e-14));
  CHECK(phi(-1.0) == doctest::Approx(0.15865525393145707).epsilon(1e-14));
  CHECK(phi(-2.0) == doctest::Approx(0.022750131948179195).epsilon(1e-12));
  CHECK(phi(1.96) == doctest::Approx(0.9750021048517795).epsilon(1e-14));
  CHECK(phi(-8.0) == doctest::Approx(6.220960574271786e-16).epsilon(1e-10));
  CHECK(phi(1.0) + phi(-1.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("normal density anchors") {
  CHECK(phi_pdf(0.0) == doctest::Approx(0.3989422804014327).epsilon(1e-14));
  CHECK(phi_pdf(1.0) == doctest::Approx(0.24197072451914337).epsilon(1e-14));
  CHECK_EQ(phi_pdf(2.0), phi_pdf(-2.0));
}

TEST_CASE("normal quantile inverts the cdf across the range") {
  for (const double p : {1e-10, 1e-6, 1e-3, 0.025, 0.3, 0.5, 0.7, 0.975,
                         1.0 - 1e-6, 1.0 - 1e-10}) {
    const double z = phi_inv(p);
    CHECK(std::abs(phi(z) - p) < 1e-11);
    // Skip the symmetric form in the extreme tails: there 1.0 - p rounds the
    // tail mass by ~1e-16 absolute, which alone moves the quantile by ~1e-7.
    if (p >= 1e-8) CHECK(phi_inv(1.0 - p) == doctest::Approx(-z).epsilon(1e-9));
  }
  CHECK_EQ(phi_inv(0.5), 0.0);
  CHECK(phi_inv(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
  CHECK(phi_inv(0.8413447460685429) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("incomplete beta identities") {
  CHECK_EQ(incomplete_beta(1.0, 1.0, 0.25), 0.25);
  // I_x(a, 1) = x^a and the reflection I_x(a,b) = 1 - I_{1-x}(b,a).
  CHECK(incomplete_beta(3.0, 1.0, 0.5) == doctest::Approx(0.125).epsilon(1e-13));
  for (const double x : {0.1, 0.4, 0.7}) {
    const double lhs = incomplete_beta(2.5, 4.0, x);
    const double rhs = 1.0 - incomplete_beta(4.0, 2.5, 1.0 - x);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
  CHECK_EQ(incomplete_beta(2.0, 3.0, 0.0), 0.0);
  CHECK_EQ(incomplete_beta(2.0, 3.0, 1.0), 1.0);
}

TEST_CASE("student t cdf basics") {
  CHECK_EQ(student_t_cdf(0.0, 5.0), 0.5);
  // One degree of freedom is the Cauchy distribution.
  CHECK(student_t_cdf(1.0, 1.0) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(student_t_cdf(-1.0, 1.0) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(student_t_cdf(3.0, 7.0) + student_t_cdf(-3.0, 7.0) ==
        doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("student t quantile anchors") {
  // Cauchy closed form: t_p = tan(pi (p - 1/2)).
  CHECK(t_quantile(0.975, 1.0) ==
        doctest::Approx(12.706204736174698).epsilon(1e-9));
  CHECK(t_quantile(0.975, 2.0) ==
        doctest::Approx(4.302652729696142).epsilon(1e-9));
  CHECK(t_quantile(0.975, 7.0) ==
        doctest::Approx(2.3646242515927844).epsilon(1e-9));
  // Large nu approaches the normal quantile.
  CHECK(t_quantile(0.975, 1000.0) ==
        doctest::Approx(1.9623390808264074).epsilon(1e-9));
  CHECK(std::abs(t_quantile(0.975, 1e6) - phi_inv(0.975)) < 1e-5);
}

TEST_CASE("student t quantile is consistent and symmetric") {
  for (const double nu : {1.0, 2.0, 3.0, 7.0, 63.0, 255.0}) {
    for (const double p : {0.6, 0.9, 0.95, 0.975, 0.995}) {
      const double q = t_quantile(p, nu);
      CHECK(std::abs(student_t_cdf(q, nu) - p) < 1e-9);
      CHECK(t_quantile(1.0 - p, nu) == doctest::Approx(-q).epsilon(1e-9));
    }
    CHECK(std::abs(t_quantile(0.5, nu)) < 1e-10);
  }
}

}  // TEST_SUITE
