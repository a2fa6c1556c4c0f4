#pragma once

#include <stdexcept>
#include <string>

namespace qbell {

/// Base class for all qbell errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyVectorError : Error {
    using Error::Error;
};

struct NegativeCoefficientError : Error {
    using Error::Error;
};

struct InvalidDimensionError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct BudgetExceededError : Error {
    using Error::Error;
};

struct ParameterOutOfRangeError : Error {
    using Error::Error;
};

struct DeltaOutOfRangeError : ParameterOutOfRangeError {
    using ParameterOutOfRangeError::ParameterOutOfRangeError;
};

struct XOutOfRangeError : ParameterOutOfRangeError {
    using ParameterOutOfRangeError::ParameterOutOfRangeError;
};

struct NonPositiveArgumentError : ParameterOutOfRangeError {
    using ParameterOutOfRangeError::ParameterOutOfRangeError;
};

struct QuadratureNotConvergedError : Error {
    using Error::Error;
};

}  // namespace qbell
