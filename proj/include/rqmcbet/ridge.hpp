#pragma once

#include <span>
#include <string_view>

namespace rqmcbet {

// Ridge test integrands on (0,1)^d: f(x) = g(sum_j phi_inv(x_j) / sqrt(d)),
// so the projection v is standard normal under uniform x. All profiles g map
// into [0,1] and have known or cheaply computable means E[g(Z)], Z ~ N(0,1).
enum class RidgeKind { jump, kink, smooth, finance };

RidgeKind ridge_kind_from_name(std::string_view name);
std::string_view ridge_kind_name(RidgeKind k);

// The profile g applied to the normal projection v.
double ridge_g(RidgeKind k, double v);

// f(x); every coordinate must lie strictly inside (0,1).
double eval_ridge(RidgeKind k, std::span<const double> x);

// E[g(Z)]: closed form for jump and smooth, quadrature (tolerance 1e-10,
// cached) for kink and finance.
double ridge_true_mean(RidgeKind k);

}  // namespace rqmcbet
