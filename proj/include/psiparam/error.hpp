#pragma once

#include <stdexcept>
#include <string>

namespace psiparam {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Vector/matrix size disagreement between operands.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Index or parameter outside its admissible range.
class RangeError : public Error {
public:
    using Error::Error;
};

// Violated construction invariant (normalization, orthogonality, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Conditional probability requested against a zero-probability tail.
class DegenerateConditional : public Error {
public:
    using Error::Error;
};

}  // namespace psiparam
