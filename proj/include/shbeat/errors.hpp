#pragma once

#include <stdexcept>
#include <string>

namespace shbeat {

/// Process exit codes used by the CLI.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,      // bad flags, unknown material/variant, invalid ranges
    exit_domain = 3,     // physical/validation errors
    exit_numerical = 4,  // solver failures
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the physical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A sideband would have imaginary longitudinal momentum: the requested
/// parameters are outside the propagating regime.
class EvanescentSidebandError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Requested mode index is not guided at this slab thickness.
class NoSuchModeError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Radiation-angle inversion asked for a target at or below the guided
/// upper limit; no radiation mode is needed there.
class NotRadiationModeError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Radiation-angle inversion target cannot be phase-matched at all.
class UnreachableTargetError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Configuration file missing, unparseable, or invalid.
class ConfigError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Command-line misuse (unknown subcommand/material/variant, bad grid spec).
class UsageError : public Error {
public:
    using Error::Error;
};

/// A numerical routine failed to converge or bracket.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

} // namespace shbeat
