#pragma once

#include <stdexcept>
#include <string>

namespace shadow {

/// Base class for every error raised by the reasoner.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closed formula was required but free variables were found.
class FreeVariableError : public Error {
 public:
  using Error::Error;
};

/// A modal node reached a component that only accepts level <= 1 input.
class ModalNodeError : public Error {
 public:
  using Error::Error;
};

/// A belief was promoted to an earlier time.
class TimeError : public Error {
 public:
  using Error::Error;
};

/// Errors carrying a source position (line/column, both 1-based).
class InputError : public Error {
 public:
  InputError(const std::string& what, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class SyntaxError : public InputError {
 public:
  using InputError::InputError;
};

class ArityError : public InputError {
 public:
  using InputError::InputError;
};

class UndeclaredSymbolError : public InputError {
 public:
  using InputError::InputError;
};

class TimeOrderError : public InputError {
 public:
  using InputError::InputError;
};

/// A proof document that does not follow the JSON proof schema.
class ProofFormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace shadow
