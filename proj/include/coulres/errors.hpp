#pragma once

#include <stdexcept>
#include <string>

namespace coulres {

// Argument outside the region where an evaluator is defined or budgeted.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleError : DomainError {
    using DomainError::DomainError;
};

// Requested accuracy cannot be reached (no anchor, fit too ill-conditioned, ...).
struct AccuracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StepFailure : AccuracyError {
    using AccuracyError::AccuracyError;
};

struct AttractivityError : DomainError {
    using DomainError::DomainError;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace coulres
