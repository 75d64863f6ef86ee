#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gaprecover {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter is outside its documented range (cutoff, angle, order, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Gap block violates the solver normalization (m > 0 requires s = 0) or the order cap.
class InvalidGap : public Error {
public:
    using Error::Error;
};

/// A linear solve lost effective rank.
class SingularSystem : public Error {
public:
    using Error::Error;
};

class DimensionTooLarge : public Error {
public:
    using Error::Error;
};

/// Two recovery results handed to a bound check do not describe the same problem.
class ScenarioMismatch : public Error {
public:
    using Error::Error;
};

class MissingGroundTruth : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

/// An arithmetic result or an input sample is NaN or infinite.
class NonFiniteValue : public Error {
public:
    using Error::Error;
};

/// Malformed sequence CSV. `row()` is 1-based and counts the header as row 1.
class CsvError : public Error {
public:
    CsvError(std::size_t row, const std::string& what)
        : Error("row " + std::to_string(row) + ": " + what), row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

}  // namespace gaprecover
