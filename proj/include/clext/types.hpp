#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace clext {

// Matrix words of order p+1 reach entries of size ~D^{(p+1)/2}; extended
// precision keeps their absolute roundoff well below the 1e-10 checks.
using Real = long double;
using Complex = std::complex<Real>;

using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

inline constexpr Real kPi = 3.141592653589793238462643383279502884L;

/// Default tolerance for parameter constraint checks.
inline constexpr Real kConstraintTol = 1e-12L;

enum class ErrorKind {
    LengthMismatch,
    ConjugationViolation,
    SumNotZero,
    NonUnitary,
    NonUnitaryTruncation,
    DimensionTooLarge,
    InvalidDimension,
    MarginTooLarge,
    EtaNormViolation,
    OrderMismatch,
    WrongLambda,
    WrongOrder,
    ParseError,
    ValidationError,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Index reduction for the cyclic subscript convention X_y = X_{y mod lambda}.
inline std::size_t cyc(long long index, std::size_t lambda) {
    const auto l = static_cast<long long>(lambda);
    return static_cast<std::size_t>(((index % l) + l) % l);
}

}  // namespace clext
