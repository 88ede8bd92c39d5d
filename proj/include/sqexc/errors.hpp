#pragma once

#include <stdexcept>
#include <string>

namespace sqexc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid argument outside the documented domain (negative degree, hbar <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// |zeta| >= 1 where a normalizable state is required.
class NotNormalizableError : public DomainError {
public:
    using DomainError::DomainError;
};

// A parameter hits a pole of the closed form (zeta = 1 in psi_q, y = -1, ...).
class SingularParameterError : public DomainError {
public:
    using DomainError::DomainError;
};

// 1 - zeta xi* vanishes (or nearly) in a scalar product.
class SingularPairError : public DomainError {
public:
    using DomainError::DomainError;
};

class SingularMatrixError : public DomainError {
public:
    using DomainError::DomainError;
};

class DivergentIntegralError : public DomainError {
public:
    using DomainError::DomainError;
};

// Truncation too small for the requested accuracy.
class CutoffError : public Error {
public:
    using Error::Error;
};

// Two evaluation paths disagree beyond their own error budget.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace sqexc
