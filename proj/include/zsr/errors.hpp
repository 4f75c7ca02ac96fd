#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zsr {

enum class ErrorKind {
    DimensionMismatch,
    NotSquare,
    NotSkew,
    NotSymmetric,
    InvalidDimension,
    InvalidArgument,
    NotInQ,
    ResidualNonzero,
    PreconditionViolated,
    NotVanishingOnH,
    HasConstantTerm,
    LowOrderTerm,
    HypothesisViolated,
    NotConstant,
    InvalidInitialCondition,
    StepSizeNonpositive,
    UnsupportedDimension,
    SyntaxError,
    VariableOutOfRange,
    InvalidFile,
};

inline std::string_view error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotInQ: return "NotInQ";
    case ErrorKind::ResidualNonzero: return "ResidualNonzero";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotVanishingOnH: return "NotVanishingOnH";
    case ErrorKind::HasConstantTerm: return "HasConstantTerm";
    case ErrorKind::LowOrderTerm: return "LowOrderTerm";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotConstant: return "NotConstant";
    case ErrorKind::InvalidInitialCondition: return "InvalidInitialCondition";
    case ErrorKind::StepSizeNonpositive: return "StepSizeNonpositive";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::VariableOutOfRange: return "VariableOutOfRange";
    case ErrorKind::InvalidFile: return "InvalidFile";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// Errors that indicate a bug in the construction rather than bad input.
    bool is_internal() const noexcept { return kind_ == ErrorKind::ResidualNonzero; }

private:
    ErrorKind kind_;
};

} // namespace zsr
