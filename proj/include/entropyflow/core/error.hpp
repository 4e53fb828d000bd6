// Error taxonomy shared by every entropyflow module.

#pragma once

#include <stdexcept>
#include <string>

namespace entropyflow {

enum class ErrorKind {
    NotHermitian,
    NonFinite,
    DimensionMismatch,
    NonlinearAction,
    DomainError,
    InvalidDistribution,
    InvalidDensity,
    UnstableStep,
    PartitionMismatch,
    IndexError,
    LambdaOutOfRange,
    InvalidState,
    SupportMismatch,
    ParameterOutOfRange,
    NoBipartition,
    InvalidBasis,
    InvalidEnsemble,
    PositivityViolation,
    NonMonotoneChannel,
    NegativeTime,
    ConfigError,
    NumericalFailure,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonlinearAction: return "NonlinearAction";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::InvalidDensity: return "InvalidDensity";
    case ErrorKind::UnstableStep: return "UnstableStep";
    case ErrorKind::PartitionMismatch: return "PartitionMismatch";
    case ErrorKind::IndexError: return "IndexError";
    case ErrorKind::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::SupportMismatch: return "SupportMismatch";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::NoBipartition: return "NoBipartition";
    case ErrorKind::InvalidBasis: return "InvalidBasis";
    case ErrorKind::InvalidEnsemble: return "InvalidEnsemble";
    case ErrorKind::PositivityViolation: return "PositivityViolation";
    case ErrorKind::NonMonotoneChannel: return "NonMonotoneChannel";
    case ErrorKind::NegativeTime: return "NegativeTime";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    }
    return "UnknownError";
}

/// Single exception type carrying a machine-checkable kind tag.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
    if (!condition) fail(kind, message);
}

} // namespace entropyflow
