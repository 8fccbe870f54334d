#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multitype {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands disagree on variable count or matrix shape.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input violates an operation precondition (e.g. constant term in a generator).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// The generator list is identically zero.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// A substitution step whose shift involves its own target variable.
class InvalidSubstitutionError : public Error {
 public:
  using Error::Error;
};

/// A weight advancement with a non-positive new entry.
class InvalidAdvancementError : public Error {
 public:
  using Error::Error;
};

/// Some multitype entry is infinite (a variable never enters the leading ideal).
class InfiniteTypeError : public Error {
 public:
  using Error::Error;
};

/// The driver exceeded its configured step cap.
class NonterminationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace multitype
