#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bide {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// Raised when the assembled system has no unique solution at the requested degree.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// Exact rational arithmetic left the 128-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Expression evaluation outside the domain of an operator (log of non-positive, x/0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An expression referenced a variable that was not supplied.
class BindingError : public Error {
public:
    using Error::Error;
};

/// A non-finite sample showed up while integrating.
class QuadratureError : public Error {
public:
    using Error::Error;
};

/// An IdeProblem violates one of its invariants.
class ProblemError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error(message + " at offset " + std::to_string(offset)), offset_(offset)
    {
    }

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace bide
