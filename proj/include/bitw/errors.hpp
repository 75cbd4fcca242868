#pragma once

#include <stdexcept>
#include <string>

namespace bitw {

// Base class for all library errors; each concrete type maps to one
// documented failure mode of the public API.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DecodeError : public Error {
public:
    using Error::Error;
};

class TooSmallError : public Error {
public:
    using Error::Error;
};

class EmptyDatasetError : public Error {
public:
    using Error::Error;
};

class UnreadableDirectoryError : public Error {
public:
    using Error::Error;
};

class DegenerateGridError : public Error {
public:
    using Error::Error;
};

class ShapeMismatchError : public Error {
public:
    using Error::Error;
};

class TooShallowError : public Error {
public:
    using Error::Error;
};

class UndefinedForSinglePixelError : public Error {
public:
    using Error::Error;
};

class DegenerateRichnessError : public Error {
public:
    using Error::Error;
};

class NonFiniteCoefficientError : public Error {
public:
    using Error::Error;
};

class EmptyTrainingSetError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class ClassTooSmallError : public Error {
public:
    using Error::Error;
};

class SingularCovarianceError : public Error {
public:
    using Error::Error;
};

class LengthMismatchError : public Error {
public:
    using Error::Error;
};

}  // namespace bitw
