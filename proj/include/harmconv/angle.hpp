#pragma once

#include <string_view>

namespace harmconv {

// Parses an angle given as a rational multiple of pi ("pi", "-pi/4",
// "7pi/8", "3*pi/4", "2/3pi") or as plain radians ("0.5", "-1e-3").
// The multiple-of-pi forms are evaluated as (p * pi) / q.
// Throws ParameterError on malformed input.
double parse_angle(std::string_view text);

}  // namespace harmconv
