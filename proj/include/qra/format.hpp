#pragma once

#include <string>

namespace ga {

// Shortest decimal that round-trips to the same double, padded to keep at
// least one fractional digit: 1 -> "1.0", -0.25 -> "-0.25".
std::string format_value(double v);

}  // namespace ga
