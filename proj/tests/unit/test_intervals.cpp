#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rqmcbet/intervals.hpp"
#include "test_util.hpp"

using namespace rqmcbet;

TEST_SUITE("intervals") {

TEST_CASE("hoeffding half width depends only on the sample size") {
  const std::vector<double> y(8, 0.5);
  const Interval iv = hoeffding_ci(y, 0.05);
  // sqrt(log(2/alpha) / (2 R)) at alpha=0.05, R=8.
  CHECK(iv.diag.half_width_preclip ==
        doctest::Approx(0.48016139565996035).epsilon(1e-13));
  CHECK(iv.lo == doctest::Approx(0.5 - 0.48016139565996035).epsilon(1e-12));
  CHECK(iv.hi == doctest::Approx(0.5 + 0.48016139565996035).epsilon(1e-12));
  CHECK_EQ(iv.R, 8);
  CHECK_EQ(iv.method, Method::hoeffding);

  const std::vector<double> z{0.1, 0.9, 0.2, 0.8, 0.3, 0.7, 0.4, 0.6};
  CHECK_EQ(hoeffding_ci(z, 0.05).diag.half_width_preclip,
           iv.diag.half_width_preclip);
}

TEST_CASE("bennett interval matches the known-variance formula") {
  const std::vector<double> y{0.5};
  const Interval iv = bennett_ci(y, 2.0 / 9.0, 0.05);
  // Full width 2H with H = sqrt(2 sigma^2 log(2/alpha)) + log(2/alpha)/3.
  CHECK(2.0 * iv.diag.half_width_preclip ==
        doctest::Approx(5.020113746262412).epsilon(1e-13));
  CHECK_EQ(iv.lo, 0.0);
  CHECK_EQ(iv.hi, 1.0);

  // Zero variance leaves only the bias term.
  const std::vector<double> z(4, 0.25);
  CHECK(bennett_ci(z, 0.0, 0.05).diag.half_width_preclip ==
        doctest::Approx(std::log(40.0) / 12.0).epsilon(1e-13));
}

TEST_CASE("empirical bernstein interval collapses to bias for constant data") {
  const std::vector<double> y(8, 0.3);
  const Interval iv = maurer_pontil_ci(y, 0.05);
  // s^2 = 0 leaves 7 log(4/alpha) / (3 (R-1)).
  CHECK(iv.diag.half_width_preclip ==
        doctest::Approx(std::log(80.0) / 3.0).epsilon(1e-13));
  CHECK_EQ(iv.method, Method::maurer_pontil);
}

TEST_CASE("clt interval uses the t quantile with R-1 degrees of freedom") {
  const std::vector<double> y{0.4, 0.6};
  const Interval iv = clt_ci(y, 0.05);
  // S/sqrt(R) = 0.1 and t(0.975, 1) = 12.7062...
  CHECK(iv.diag.half_width_preclip ==
        doctest::Approx(1.2706204736508413).epsilon(1e-9));
  CHECK_EQ(iv.lo, 0.0);
  CHECK_EQ(iv.hi, 1.0);

  const std::vector<double> z(16, 0.5);
  const Interval degenerate = clt_ci(z, 0.05);
  CHECK_EQ(degenerate.lo, 0.5);
  CHECK_EQ(degenerate.hi, 0.5);
}

TEST_CASE("intervals are clipped to the unit interval but keep diagnostics") {
  const std::vector<double> y(4, 0.99);
  for (const Interval& iv :
       {hoeffding_ci(y, 0.1), maurer_pontil_ci(y, 0.1), bennett_ci(y, 0.25, 0.1)}) {
    CHECK(iv.lo >= 0.0);
    CHECK(iv.hi <= 1.0);
    CHECK(iv.lo <= iv.hi);
    CHECK(iv.diag.half_width_preclip >= 0.5 * (iv.hi - iv.lo));
  }
}

TEST_CASE("symmetric-formula intervals are data-order invariant") {
  std::vector<double> y = testutil::uniforms(404, 32);
  std::vector<double> shuffled = y;
  std::mt19937 urbg(9);
  std::shuffle(shuffled.begin(), shuffled.end(), urbg);

  const Interval h0 = hoeffding_ci(y, 0.05), h1 = hoeffding_ci(shuffled, 0.05);
  CHECK(h0.lo == doctest::Approx(h1.lo).epsilon(1e-13));
  CHECK(h0.hi == doctest::Approx(h1.hi).epsilon(1e-13));
  const Interval m0 = maurer_pontil_ci(y, 0.05);
  const Interval m1 = maurer_pontil_ci(shuffled, 0.05);
  CHECK(m0.lo == doctest::Approx(m1.lo).epsilon(1e-13));
  CHECK(m0.hi == doctest::Approx(m1.hi).epsilon(1e-13));
  const Interval c0 = clt_ci(y, 0.05), c1 = clt_ci(shuffled, 0.05);
  CHECK(c0.lo == doctest::Approx(c1.lo).epsilon(1e-13));
  CHECK(c0.hi == doctest::Approx(c1.hi).epsilon(1e-13));
}

TEST_CASE("widths shrink as the sample grows") {
  const std::vector<double> y64 = testutil::uniforms(7, 64);
  const std::vector<double> y256 = testutil::uniforms(7, 256);
  CHECK(hoeffding_ci(y256, 0.05).diag.half_width_preclip <
        hoeffding_ci(y64, 0.05).diag.half_width_preclip);
  CHECK(maurer_pontil_ci(y256, 0.05).diag.half_width_preclip <
        maurer_pontil_ci(y64, 0.05).diag.half_width_preclip);
  CHECK(clt_ci(y256, 0.05).diag.half_width_preclip <
        clt_ci(y64, 0.05).diag.half_width_preclip);
}

TEST_CASE("input validation") {
  const std::vector<double> empty;
  const std::vector<double> one{0.5};
  const std::vector<double> bad{0.5, 1.5};
  CHECK_THROWS_AS(hoeffding_ci(empty, 0.05), std::invalid_argument);
  CHECK_THROWS_AS(hoeffding_ci(one, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(hoeffding_ci(one, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(hoeffding_ci(bad, 0.05), std::domain_error);
  CHECK_THROWS_AS(maurer_pontil_ci(one, 0.05), std::invalid_argument);
  CHECK_THROWS_AS(clt_ci(one, 0.05), std::invalid_argument);
  CHECK_THROWS_AS(bennett_ci(one, -0.1, 0.05), std::invalid_argument);
}

TEST_CASE("method names round trip") {
  for (const Method m : {Method::hoeffding, Method::bennett,
                         Method::maurer_pontil, Method::clt, Method::ebci,
                         Method::hbci}) {
    CHECK_EQ(method_from_name(method_name(m)), m);
  }
  CHECK_EQ(method_from_name("mp"), Method::maurer_pontil);
  CHECK_EQ(method_from_name("student-t"), Method::clt);
  CHECK_EQ(method_from_name("prpl-eb"), Method::ebci);
  CHECK_THROWS_AS(method_from_name("bogus"), std::invalid_argument);
}

TEST_CASE("interval helpers") {
  Interval iv;
  iv.lo = 0.2;
  iv.hi = 0.7;
  CHECK_EQ(iv.width(), doctest::Approx(0.5));
  CHECK(iv.contains(0.2));
  CHECK(iv.contains(0.7));
  CHECK(!iv.contains(0.1999));
  CHECK(!iv.contains(0.7001));
}

}  // TEST_SUITE
