#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace expander {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line()` is 1-based; 0 means "not tied to a line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An iterative method ran out of iterations before meeting its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual, std::size_t iterations)
      : Error(what + " (residual " + std::to_string(residual) + " after " +
              std::to_string(iterations) + " iterations)"),
        residual_(residual),
        iterations_(iterations) {}

  double residual() const noexcept { return residual_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  std::size_t iterations_;
};

/// A generator produced a structure that violates the simple-graph contract.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace expander
