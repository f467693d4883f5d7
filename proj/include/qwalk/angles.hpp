#pragma once

#include <string_view>

#include "qwalk/parse_error.hpp"

namespace qwalk {

// Radians from a literal: "pi/4", "5pi/12", "2pi", "-pi/3", or a plain
// decimal such as "0.5" or "1e-2".
double parse_angle(std::string_view text);

}  // namespace qwalk
