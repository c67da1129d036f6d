#pragma once

#include <stdexcept>
#include <string>

namespace hpmbs {

/// Base for every error raised by the library. Callers that only need to
/// distinguish "bad input" from everything else can catch this.
class Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// NaN or otherwise unusable numeric input.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Valuation time after maturity.
class InvalidTimeError : public Error {
public:
    using Error::Error;
};

/// Zero dimensionless time where a formula is singular (similarity map,
/// reduced closed form).
class DegenerateTimeError : public Error {
public:
    using Error::Error;
};

/// Basket weights that do not sum to one.
class ConstraintError : public Error {
public:
    using Error::Error;
};

/// Covariance that is not symmetric positive semidefinite.
class MatrixError : public Error {
public:
    using Error::Error;
};

/// Reduced quanto volatility that is zero or negative.
class DegenerateVolatilityError : public Error {
public:
    using Error::Error;
};

/// Series order or term index outside the supported range.
class UnsupportedOrderError : public Error {
public:
    using Error::Error;
};

}  // namespace hpmbs
