// errors.hpp - Exception types raised by the sedeph library

#pragma once

#include <stdexcept>
#include <string>

namespace sedeph {

// Base of every library error. Numerical failures and invalid inputs both
// derive from here so the CLI can map them onto exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid inputs (config-level problems).
struct InputError : Error {
    using Error::Error;
};

struct TraceError : InputError {
    using InputError::InputError;
};
struct NegativityError : InputError {
    using InputError::InputError;
};
struct DimensionError : InputError {
    using InputError::InputError;
};
struct RangeError : InputError {
    using InputError::InputError;
};
struct DomainError : InputError {
    using InputError::InputError;
};
struct TruncationError : InputError {
    using InputError::InputError;
};

// Numerical failures.
struct NumericalError : Error {
    using Error::Error;
};

struct QuadratureError : NumericalError {
    using NumericalError::NumericalError;
};
struct BracketError : NumericalError {
    using NumericalError::NumericalError;
};
struct NotReachedError : NumericalError {
    using NumericalError::NumericalError;
};
struct InternalError : NumericalError {
    using NumericalError::NumericalError;
};

} // namespace sedeph
