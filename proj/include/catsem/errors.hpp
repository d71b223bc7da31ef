#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catsem {

/// Base of every error thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Domain/codomain mismatch when composing or pulling back.
class BoundaryError : public Error {
 public:
  using Error::Error;
};

/// A value failed its construction-time invariant (functoriality, naturality,
/// closure, section law...).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A structure map of a lazily enumerated algebra produced a value beyond the
/// materialization capacity.
class OutOfBoundError : public Error {
 public:
  OutOfBoundError(std::string operation, std::string input, std::size_t value, std::size_t capacity)
      : Error("out of bound: " + operation + "(" + input + ") = " + std::to_string(value) +
              " exceeds capacity " + std::to_string(capacity)),
        operation_(std::move(operation)),
        input_(std::move(input)) {}

  const std::string& operation() const { return operation_; }
  const std::string& input() const { return input_; }

 private:
  std::string operation_;
  std::string input_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Type mismatch, unbound variable or ill-typed substitution in the front end.
class TypeError : public Error {
 public:
  using Error::Error;
};

}  // namespace catsem
