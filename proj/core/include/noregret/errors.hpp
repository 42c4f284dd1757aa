#pragma once

#include <stdexcept>
#include <string>

namespace noregret {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite input, empty input, or a value outside an operation's domain.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidInput {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : InvalidInput("dimension mismatch: expected " + std::to_string(expected) +
                     ", got " + std::to_string(actual)) {}
};

/// Point outside the domain of a regularizer or loss function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operation not available for this body/regularizer/schedule kind.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// An iterative solver stopped before reaching its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace noregret
