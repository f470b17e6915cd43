#pragma once

#include <span>
#include <string>

namespace vba {

/// Shortest round-tripping decimal form; integral values print without a
/// fractional part, infinities as "inf"/"-inf".
std::string format_number(double v);
std::string format_numbers(std::span<const double> values);

}  // namespace vba
