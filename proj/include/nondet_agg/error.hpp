#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nda {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed operator-spec document, expression or carrier description.
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

/// Values of different kinds (or different moduli) were combined or compared.
class KindError : public Error {
 public:
  using Error::Error;
};

/// Evaluation of a user operator failed: division by zero, overflow, a
/// non-finite float result. The message names the offending inputs.
class EvalError : public Error {
 public:
  using Error::Error;
};

/// Bad flags, bounds outside the guards, unknown presets.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace nda
