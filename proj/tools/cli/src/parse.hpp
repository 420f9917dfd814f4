#pragma once

#include <string>
#include <vector>

#include "opaque/geometry.hpp"

namespace opaque::cli {

/// Decimal or scientific real. A fractional exponent is allowed
/// ("1e-4.1" is 10^-4.1). Throws ParseError naming `flag`.
double parse_real(const std::string& text, const std::string& flag);

/// Comma-separated angles: "pi/6", "5pi/6", "5*pi/6", "pi", "30deg", or a
/// plain number of radians. "all" yields an empty list.
std::vector<Angle> parse_angles(const std::string& text);

/// "a:b:step" -> a, a + step, ..., up to b (inclusive within step/1e6).
std::vector<double> parse_sweep(const std::string& text, const std::string& flag);

}  // namespace opaque::cli
