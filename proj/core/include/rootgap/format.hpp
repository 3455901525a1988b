#pragma once

#include <string>

namespace rootgap {

/// Shortest decimal representation that round-trips to the same double
/// (at most 17 significant digits). "nan", "inf" and "-inf" for non-finite
/// input.
std::string format_double(double value);

}  // namespace rootgap
