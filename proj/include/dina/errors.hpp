#pragma once

#include <stdexcept>
#include <string>

namespace dina {

// Malformed text input; `line` is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every row of a Q-matrix is zero: no item measures any attribute.
class DegenerateMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the structural patterns the witness construction covers.
class UnsupportedPatternError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Witness solution left the open parameter region; a shrink factor closer
// to 1 keeps the perturbation feasible.
class InfeasibleShrinkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dina
