#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace momhist {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text could not be turned into a dataset. Line and column are 1-based;
/// both are 0 for whole-input problems such as empty input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// All values equal: no bounded parameter domain exists.
class DegenerateDataError : public Error {
 public:
  using Error::Error;
};

/// Too few observations (or zero spread) for a moment-based operation.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Anchor/width/bin-cap combination violates the grid invariants for the data.
class InvalidGridError : public Error {
 public:
  using Error::Error;
};

/// Skewness of a histogram with one occupied bin.
class UndefinedSkewnessError : public Error {
 public:
  using Error::Error;
};

}  // namespace momhist
