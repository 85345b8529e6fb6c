#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rqmcbet/sobol.hpp"

namespace rqmcbet {

using Integrand = std::function<double(std::span<const double>)>;

// R independent replicate means of one integrand over scrambled n-point sets.
struct ReplicateSample {
  std::vector<double> y;
  std::int64_t n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  std::string integrand_id;

  int R() const { return int(y.size()); }
  double mean() const;
};

// Draws R independent scramblings of the first n Sobol' points in [0,1)^d
// and returns the per-replicate averages of f. f must map into [0,1];
// excursions up to 1e-12 are clamped, larger ones raise std::domain_error.
ReplicateSample replicate_estimates(const Integrand& f, int d, std::int64_t n,
                                    int R, std::uint64_t seed,
                                    std::string_view integrand_id = {});

}  // namespace rqmcbet
