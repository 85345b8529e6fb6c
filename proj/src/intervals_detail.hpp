#pragma once

#include <cstddef>
#include <span>

#include "rqmcbet/intervals.hpp"

namespace rqmcbet::detail {

void check_unit_range(std::span<const double> y, const char* who);
double sample_mean(std::span<const double> y);
double sample_var(std::span<const double> y, double mean);
Interval clipped(Method m, double alpha, double center, double half,
                 std::size_t R);
void check_alpha(double alpha, const char* who);

}  // namespace rqmcbet::detail
