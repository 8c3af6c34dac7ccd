#pragma once

#include <stdexcept>
#include <string>

namespace riordan {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: polynomial literals, JSON documents, unknown names.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Violated mathematical precondition: non-invertible element, shape
/// mismatch, index beyond the truncation order.
class MathError : public Error {
public:
    using Error::Error;
};

}  // namespace riordan
