#include "clext/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace clext {

std::string format_real(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (value == 0.0) return "0";
    char buf[40];
    for (int digits = 1; digits <= 15; ++digits) {
        std::snprintf(buf, sizeof buf, "%.*g", digits, value);
        if (std::strtod(buf, nullptr) == value) return buf;
    }
    return buf;
}

double round_sig15(double value) {
    if (!std::isfinite(value)) return value;
    return std::strtod(format_real(value).c_str(), nullptr);
}

}  // namespace clext
