#include "rqmcbet/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace rqmcbet {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
constexpr int kEvalsPerApplication = 15;
constexpr int kMaxDepth = 60;

struct Segment {
  double a, b, value, error;
  int depth;
};

struct ByError {
  bool operator()(const Segment& x, const Segment& y) const {
    return x.error < y.error;
  }
};

Segment apply_rule(const std::function<double(double)>& f, double a, double b,
                   int depth) {
  Segment s{a, b, 0.0, 0.0, depth};
  s.value = Rule::integrate(f, a, b, 0, 0.0, &s.error);
  return s;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol,
                           std::span<const double> breakpoints, int max_evals) {
  if (!(b >= a)) throw std::invalid_argument("integrate: requires b >= a");
  if (!(abs_tol > 0.0))
    throw std::invalid_argument("integrate: tolerance must be positive");

  std::vector<double> edges;
  edges.push_back(a);
  for (const double bp : breakpoints)
    if (bp > a && bp < b) edges.push_back(bp);
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  QuadratureResult acc;
  std::priority_queue<Segment, std::vector<Segment>, ByError> heap;
  double total_err = 0;
  for (std::size_t s = 0; s + 1 < edges.size(); ++s) {
    const Segment seg = apply_rule(f, edges[s], edges[s + 1], 0);
    acc.evals += kEvalsPerApplication;
    total_err += seg.error;
    heap.push(seg);
  }

  // Globally adaptive refinement: bisect the segment with the largest error
  // estimate until the summed estimate meets the absolute tolerance. Endpoint
  // singularities (integrable cusps at breakpoints) stay at segment edges,
  // which the open Gauss-Kronrod rule never samples.
  while (total_err > abs_tol && !heap.empty()) {
    const Segment worst = heap.top();
    if (worst.depth >= kMaxDepth ||
        acc.evals + 2 * kEvalsPerApplication > max_evals)
      break;
    heap.pop();
    total_err -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    for (const Segment& child : {apply_rule(f, worst.a, mid, worst.depth + 1),
                                 apply_rule(f, mid, worst.b, worst.depth + 1)}) {
      acc.evals += kEvalsPerApplication;
      total_err += child.error;
      heap.push(child);
    }
  }

  while (!heap.empty()) {
    acc.value += heap.top().value;
    heap.pop();
  }
  acc.error = total_err;
  acc.converged = total_err <= abs_tol;
  return acc;
}

}  // namespace rqmcbet
