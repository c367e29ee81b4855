#pragma once

#include <string>

namespace clext {

/// Shortest decimal that round-trips, capped at 15 significant digits.
std::string format_real(double value);

/// Rounds to the value format_real() prints.
double round_sig15(double value);

}  // namespace clext
