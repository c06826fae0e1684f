#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rackhopf {

// Input or validation failure (CLI exit code 1).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource bound was hit (CLI exit code 2).
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A self-check failed; indicates a bug rather than bad input (CLI exit code 3).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DivisionByZero : public ValidationError {
 public:
  DivisionByZero() : ValidationError("division by zero") {}
};

class NonSquare : public ValidationError {
 public:
  NonSquare(std::size_t r, std::size_t c)
      : ValidationError("matrix is not square: " + std::to_string(r) + "x" +
                        std::to_string(c)) {}
};

class UnknownName : public ValidationError {
 public:
  explicit UnknownName(std::string const& name)
      : ValidationError("unknown name: " + name) {}
};

}  // namespace rackhopf
