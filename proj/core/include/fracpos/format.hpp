#pragma once

#include <string>

namespace fracpos {

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double x);

}  // namespace fracpos
