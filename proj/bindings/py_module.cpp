// Python bindings for the core operations: point generation, replicate
// estimation, every confidence-interval method, replicate-size allocation,
// and the exact-variance / ridge-integrand oracles.
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rqmcbet/allocation.hpp"
#include "rqmcbet/experiment.hpp"
#include "rqmcbet/intervals.hpp"
#include "rqmcbet/normal.hpp"
#include "rqmcbet/replicates.hpp"
#include "rqmcbet/ridge.hpp"
#include "rqmcbet/rng.hpp"
#include "rqmcbet/sobol.hpp"
#include "rqmcbet/stratified_variance.hpp"
#include "rqmcbet/student_t.hpp"

namespace py = pybind11;
using namespace rqmcbet;

namespace {

BetParams bet_params(double alpha, double c, double theta, int target_R) {
  BetParams p;
  p.alpha = alpha;
  p.c = c;
  p.theta = theta;
  p.target_R = target_R;
  return p;
}

std::vector<std::vector<double>> as_rows(const PointSet& pts) {
  std::vector<std::vector<double>> rows(std::size_t(pts.n));
  for (std::int64_t i = 0; i < pts.n; ++i) {
    rows[std::size_t(i)].resize(std::size_t(pts.d));
    for (int j = 0; j < pts.d; ++j) rows[std::size_t(i)][std::size_t(j)] = pts.value(i, j);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Randomized quasi-Monte Carlo mean estimation with "
            "anytime-valid confidence intervals";

  py::class_<Interval>(m, "Interval")
      .def_property_readonly("method",
                             [](const Interval& iv) {
                               return std::string(method_name(iv.method));
                             })
      .def_readonly("alpha", &Interval::alpha)
      .def_readonly("lo", &Interval::lo)
      .def_readonly("hi", &Interval::hi)
      .def_readonly("n", &Interval::n)
      .def_readonly("R", &Interval::R)
      .def_property_readonly("half_width_preclip",
                             [](const Interval& iv) {
                               return iv.diag.half_width_preclip;
                             })
      .def("width", &Interval::width)
      .def("contains", &Interval::contains, py::arg("m"))
      .def("__repr__", [](const Interval& iv) {
        return "Interval(" + std::string(method_name(iv.method)) + ", [" +
               std::to_string(iv.lo) + ", " + std::to_string(iv.hi) + "])";
      });

  py::class_<ReplicateSample>(m, "ReplicateSample")
      .def_readonly("y", &ReplicateSample::y)
      .def_readonly("n", &ReplicateSample::n)
      .def_readonly("d", &ReplicateSample::d)
      .def_readonly("seed", &ReplicateSample::seed)
      .def_readonly("integrand_id", &ReplicateSample::integrand_id)
      .def("R", &ReplicateSample::R)
      .def("mean", &ReplicateSample::mean);

  py::class_<CapitalTrace>(m, "CapitalTrace")
      .def_readonly("log_up", &CapitalTrace::log_up)
      .def_readonly("log_down", &CapitalTrace::log_down)
      .def_readonly("log_hedged", &CapitalTrace::log_hedged)
      .def_readonly("max_log_hedged", &CapitalTrace::max_log_hedged);

  py::class_<AllocationResult>(m, "AllocationResult")
      .def_readonly("n_star", &AllocationResult::n_star)
      .def_readonly("n", &AllocationResult::n)
      .def_readonly("half_width", &AllocationResult::half_width)
      .def_readonly("effective_budget", &AllocationResult::effective_budget);

  // Point generation.
  m.def(
      "sobol_points",
      [](std::int64_t n, int d) {
        return as_rows(SobolGenerator(d).generate(n));
      },
      py::arg("n"), py::arg("d"),
      "First n points of the digital sequence in natural order");
  m.def(
      "scrambled_points",
      [](std::int64_t n, int d, std::uint64_t seed, std::uint64_t replicate) {
        const PointSet pts = SobolGenerator(d).generate(n);
        return as_rows(scramble(pts, ScrambleState::draw(d, seed, replicate)));
      },
      py::arg("n"), py::arg("d"), py::arg("seed"), py::arg("replicate") = 0,
      "One random linear scrambling plus digital shift of the first n points");

  // Replicated estimates of the built-in integrands.
  m.def(
      "replicate_estimates",
      [](const std::string& integrand, int d, std::int64_t n, int R,
         std::uint64_t seed) {
        const IntegrandInfo& info = integrand_info(integrand);
        return replicate_estimates(info.make(d), d, n, R, seed, integrand);
      },
      py::arg("integrand"), py::arg("d"), py::arg("n"), py::arg("R"),
      py::arg("seed"),
      "R independent replicate means of a named integrand");
  m.def("known_integrands", &known_integrands);
  m.def(
      "integrand_true_mean",
      [](const std::string& name) { return integrand_info(name).true_mean; },
      py::arg("name"));

  // Confidence intervals for means of [0,1] data.
  m.def(
      "hoeffding_ci",
      [](const std::vector<double>& y, double alpha) {
        return hoeffding_ci(y, alpha);
      },
      py::arg("y"), py::arg("alpha") = 0.05);
  m.def(
      "bennett_ci",
      [](const std::vector<double>& y, double sigma_sq, double alpha) {
        return bennett_ci(y, sigma_sq, alpha);
      },
      py::arg("y"), py::arg("sigma_sq"), py::arg("alpha") = 0.05);
  m.def(
      "maurer_pontil_ci",
      [](const std::vector<double>& y, double alpha) {
        return maurer_pontil_ci(y, alpha);
      },
      py::arg("y"), py::arg("alpha") = 0.05);
  m.def(
      "clt_ci",
      [](const std::vector<double>& y, double alpha) {
        return clt_ci(y, alpha);
      },
      py::arg("y"), py::arg("alpha") = 0.05);
  m.def(
      "prpl_eb_ci",
      [](const std::vector<double>& y, double alpha, double c, double theta,
         int target_R) {
        return prpl_eb_ci(y, bet_params(alpha, c, theta, target_R));
      },
      py::arg("y"), py::arg("alpha") = 0.05, py::arg("c") = 0.5,
      py::arg("theta") = 0.5, py::arg("target_R") = 0);
  m.def(
      "hbci",
      [](const std::vector<double>& y, double alpha, double c, double theta,
         int target_R) {
        return hbci(y, bet_params(alpha, c, theta, target_R));
      },
      py::arg("y"), py::arg("alpha") = 0.05, py::arg("c") = 0.5,
      py::arg("theta") = 0.5, py::arg("target_R") = 0);
  m.def(
      "hedged_capital",
      [](const std::vector<double>& y, double mu, double alpha, double c,
         double theta, int target_R) {
        return hedged_capital(y, mu, bet_params(alpha, c, theta, target_R));
      },
      py::arg("y"), py::arg("m"), py::arg("alpha") = 0.05, py::arg("c") = 0.5,
      py::arg("theta") = 0.5, py::arg("target_R") = 0,
      "Betting capital trace against the candidate mean m");

  // Replicate-size allocation under the power-law variance model.
  m.def("bennett_half_width", &bennett_half_width, py::arg("sigma_sq"),
        py::arg("R"), py::arg("alpha"));
  m.def(
      "model_half_width",
      [](double n, double N, double sigma0_sq, double theta, double alpha) {
        return model_half_width(n, N, VarianceModel{sigma0_sq, theta}, alpha);
      },
      py::arg("n"), py::arg("N"), py::arg("sigma0_sq"), py::arg("theta"),
      py::arg("alpha") = 0.05);
  m.def(
      "optimal_n_unconstrained",
      [](double N, double sigma0_sq, double theta, double alpha) {
        return optimal_n_unconstrained(N, VarianceModel{sigma0_sq, theta}, alpha);
      },
      py::arg("N"), py::arg("sigma0_sq"), py::arg("theta"),
      py::arg("alpha") = 0.05);
  m.def(
      "optimal_n_continuous",
      [](double N, double sigma0_sq, double theta, double alpha) {
        return optimal_n_continuous(N, VarianceModel{sigma0_sq, theta}, alpha);
      },
      py::arg("N"), py::arg("sigma0_sq"), py::arg("theta"),
      py::arg("alpha") = 0.05);
  m.def(
      "optimal_n_discrete",
      [](std::int64_t N, double sigma0_sq, double theta, double alpha,
         bool pow2_only) {
        return optimal_n_discrete(N, VarianceModel{sigma0_sq, theta}, alpha,
                                  pow2_only);
      },
      py::arg("N"), py::arg("sigma0_sq"), py::arg("theta"),
      py::arg("alpha") = 0.05, py::arg("pow2_only") = true);
  m.def("guidance_bound", &guidance_bound, py::arg("N"), py::arg("theta"),
        py::arg("alpha") = 0.05);
  m.def(
      "width_ratio",
      [](double N, double sigma0_sq, double theta, double alpha) {
        return width_ratio(N, VarianceModel{sigma0_sq, theta}, alpha);
      },
      py::arg("N"), py::arg("sigma0_sq"), py::arg("theta"),
      py::arg("alpha") = 0.05);

  // Exact per-replicate variances of the one-dimensional oracles.
  m.def("var_indicator_third", &var_indicator_third, py::arg("n"));
  m.def("var_smooth_exact", &var_smooth_exact, py::arg("n"));

  // Ridge integrands.
  m.def(
      "eval_ridge",
      [](const std::string& kind, const std::vector<double>& x) {
        return eval_ridge(ridge_kind_from_name(kind), x);
      },
      py::arg("kind"), py::arg("x"));
  m.def(
      "ridge_true_mean",
      [](const std::string& kind) {
        return ridge_true_mean(ridge_kind_from_name(kind));
      },
      py::arg("kind"));

  // Special functions and seeding.
  m.def("phi", &phi, py::arg("z"));
  m.def("phi_inv", &phi_inv, py::arg("p"));
  m.def("t_quantile", &t_quantile, py::arg("p"), py::arg("nu"));
  m.def("mix_seed", &mix_seed, py::arg("base"), py::arg("context"));
}
