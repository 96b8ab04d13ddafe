#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nabla_frac {

/// Raised when a grid function is too short for the requested operator.
class DomainTooShort : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised by the solvers when |1 - p(t)| falls below the singularity threshold.
class SingularStep : public std::runtime_error {
 public:
  SingularStep(std::int64_t t, double pivot)
      : std::runtime_error("singular step at t = " + std::to_string(t) +
                           ": |1 - p(t)| = " + std::to_string(pivot)),
        t_(t),
        pivot_(pivot) {}

  std::int64_t t() const noexcept { return t_; }
  double pivot() const noexcept { return pivot_; }

 private:
  std::int64_t t_;
  double pivot_;
};

/// Malformed CSV input; carries the 1-based line number of the offending row.
class CsvError : public std::invalid_argument {
 public:
  CsvError(std::size_t line, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace nabla_frac
