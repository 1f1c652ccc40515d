#pragma once

#include <stdexcept>
#include <string>

namespace fdsec {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the documented domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature did not reach the requested accuracy within its panel budget.
class QuadratureError : public Error {
public:
    using Error::Error;
};

/// Root bracket endpoints have the same sign.
class BracketError : public Error {
public:
    using Error::Error;
};

/// Iterative method hit its iteration cap.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace fdsec
