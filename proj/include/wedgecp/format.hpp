#pragma once

#include <string>

namespace wedgecp {

/// Shortest decimal string that reads back to the same double.
/// Non-finite values print as "nan", "inf", "-inf".
std::string format_double(double value);

}  // namespace wedgecp
