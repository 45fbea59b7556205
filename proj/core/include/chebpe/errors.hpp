#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chebpe {

// Base class for all library errors. Everything thrown by chebpe derives
// from this, so callers (CLI, tests) can catch one type at the boundary.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A truncation order or term count outside its documented range.
class InvalidOrderError : public Error {
 public:
  using Error::Error;
};

// Mismatched vector/matrix sizes between cooperating objects.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An argument outside the mathematical/physical domain of an operation
// (depth outside [0,H], non-positive range, invalid profile table, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Rational-propagator coefficient synthesis failed (singular coefficient
// system or non-convergent root finding). Message carries diagnostics.
class SynthesisError : public Error {
 public:
  using Error::Error;
};

// Scalar propagator evaluation hit a pole 1 + beta_j*t = 0.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, int term) : Error(what), term_(term) {}
  // Index j (1-based) of the offending rational term.
  int term() const { return term_; }

 private:
  int term_;
};

// A stepped-system factor L_j was numerically singular at factorization.
class FactorizationError : public Error {
 public:
  FactorizationError(const std::string& what, int term) : Error(what), term_(term) {}
  int term() const { return term_; }

 private:
  int term_;
};

// The range march produced non-finite values or runaway growth.
class InstabilityError : public Error {
 public:
  InstabilityError(const std::string& what, std::size_t step) : Error(what), step_(step) {}
  // March step index (1-based) at which the blow-up was detected.
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// A starter kind was requested for an environment it does not support.
class UnsupportedStarterError : public Error {
 public:
  using Error::Error;
};

// Config-file parsing/validation failure; carries the 1-based line number
// (0 when the failure is not tied to a specific line).
class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, int line = 0) : Error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace chebpe
