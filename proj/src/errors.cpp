#include "clext/types.hpp"

namespace clext {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ConjugationViolation: return "ConjugationViolation";
    case ErrorKind::SumNotZero: return "SumNotZero";
    case ErrorKind::NonUnitary: return "NonUnitary";
    case ErrorKind::NonUnitaryTruncation: return "NonUnitaryTruncation";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::MarginTooLarge: return "MarginTooLarge";
    case ErrorKind::EtaNormViolation: return "EtaNormViolation";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::WrongLambda: return "WrongLambda";
    case ErrorKind::WrongOrder: return "WrongOrder";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

}  // namespace clext
