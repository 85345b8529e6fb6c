#pragma once

namespace rqmcbet {

// Standard normal CDF, density, and quantile. phi_inv uses a rational
// initial approximation polished with one Halley step against phi, giving
// |phi(phi_inv(p)) - p| well below 1e-11 across (0,1).
double phi(double z);
double phi_pdf(double z);
double phi_inv(double p);

}  // namespace rqmcbet
