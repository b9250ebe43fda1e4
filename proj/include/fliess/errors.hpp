#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fliess {

// Root of the library's exception hierarchy. The CLI maps each leaf to an
// exit code: parse errors 2, domain errors 3, capacity errors 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// A coefficient was requested beyond the length a truncated series knows.
class TruncationError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotInvertibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ClassificationError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Input lies outside what an algorithm is built to handle; never a partial answer.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace fliess
