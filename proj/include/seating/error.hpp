#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace seating {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A placement covers a seat that is already occupied.
class SeatConflict : public Error {
 public:
  using Error::Error;
};

class RowOutOfRange : public Error {
 public:
  using Error::Error;
};

/// No contiguous run of empty seats fits the arriving group.
///
/// When raised from a simulation the failing arrival step (1-based) and, for
/// Monte Carlo aggregation, the run index are attached.
class NoFeasiblePlacement : public Error {
 public:
  explicit NoFeasiblePlacement(const std::string& what,
                               std::optional<std::size_t> step = std::nullopt,
                               std::optional<std::size_t> run = std::nullopt)
      : Error(what), step_(step), run_(run) {}

  std::optional<std::size_t> step() const { return step_; }
  std::optional<std::size_t> run() const { return run_; }

 private:
  std::optional<std::size_t> step_;
  std::optional<std::size_t> run_;
};

class MissingObservedData : public Error {
 public:
  using Error::Error;
};

/// Error tied to a position in a text document. Line and column are 1-based;
/// zero means the location is unknown (e.g. programmatic validation).
class LocatedError : public Error {
 public:
  LocatedError(std::size_t line, std::size_t column, const std::string& message)
      : Error(format(line, column, message)), line_(line), column_(column), message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  static std::string format(std::size_t line, std::size_t column, const std::string& message) {
    if (line == 0) return message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Malformed syntax.
class ParseError : public LocatedError {
 public:
  using LocatedError::LocatedError;
};

/// Well-formed syntax describing an invalid value (out-of-bounds seat,
/// duplicate occupancy, size mismatch).
class ValidationError : public LocatedError {
 public:
  using LocatedError::LocatedError;
  explicit ValidationError(const std::string& message) : LocatedError(0, 0, message) {}
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class AllRecordsFiltered : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace seating
