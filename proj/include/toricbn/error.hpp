#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricbn {

enum class ErrorKind {
    ZeroVector,
    ParallelLines,
    NonPrimitiveRay,
    DuplicateRay,
    NotComplete,
    TooFewRays,
    SingularCone,
    SingularFan,
    InvalidFakePlane,
    TooFewTerms,
    ZeroCoefficient,
    ZeroCoordinate,
    LengthMismatch,
    IndexOutOfRange,
    DomainViolation,
    InternalContradiction,
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::ParallelLines: return "ParallelLines";
    case ErrorKind::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorKind::DuplicateRay: return "DuplicateRay";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::TooFewRays: return "TooFewRays";
    case ErrorKind::SingularCone: return "SingularCone";
    case ErrorKind::SingularFan: return "SingularFan";
    case ErrorKind::InvalidFakePlane: return "InvalidFakePlane";
    case ErrorKind::TooFewTerms: return "TooFewTerms";
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::InternalContradiction: return "InternalContradiction";
    }
    return "Unknown";
}

/// Domain error raised by the library. `kind()` is stable and is what
/// callers (and the CLI exit-code mapping) should dispatch on.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Malformed input documents (bad JSON, missing fields, unparsable numbers).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace toricbn
