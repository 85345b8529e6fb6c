#pragma once

#include <string>
#include <string_view>

#include "rqmcbet/intervals.hpp"

namespace rqmcbet {

// All numeric text output uses nine significant digits.
std::string fmt9(double v);

std::string json_escape(std::string_view s);

// One flat JSON object: {"method":..., "alpha":..., "lo":..., "hi":...,
// "half_width_preclip":..., "n":..., "R":...}; n is null when unknown.
std::string interval_json(const Interval& iv);

}  // namespace rqmcbet
