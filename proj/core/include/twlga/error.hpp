#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twlga {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dimension mismatch or a violated type invariant.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// GaParams (or another parameter block) outside its admissible range.
class InvalidParams : public Error {
public:
    using Error::Error;
};

/// A gene names a node outside [1, R].
class CorruptChromosome : public Error {
public:
    using Error::Error;
};

/// Exhaustive search refused because the search space exceeds its guard.
class TooLarge : public Error {
public:
    using Error::Error;
};

/// Calibration data cannot determine the model parameters.
class IllPosed : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    IoError(std::string path, const std::string& what)
        : Error(path + ": " + what), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Malformed trace line. `line` and `column` are 1-based; `column` counts
/// whitespace-separated fields.
class ParseError : public Error {
public:
    ParseError(std::string file, std::size_t line, std::size_t column, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          file_(std::move(file)), line_(line), column_(column) {}

    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string file_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace twlga
