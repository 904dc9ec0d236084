#pragma once

#include <stdexcept>
#include <string>

namespace meshcal {

// Base of all library errors. CLI exit-code mapping:
//   ValidationError -> 1, IoError -> 2, DivergenceError -> 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class ZeroLengthVector : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class IndexOutOfRange : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class SkeletonMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ShapeMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegenerateBone : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegenerateConfiguration : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// A file parsed but its contents violate a structural rule (bad topology,
// wrong element counts, mismatched shape headers).
class SchemaError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ParseError : public IoError {
public:
    using IoError::IoError;
};

// Fitting produced a non-finite loss or non-finite weights.
class DivergenceError : public Error {
public:
    using Error::Error;
};

} // namespace meshcal
