#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

// Invalid argument for a mathematical function (negative distance, pole, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// (n, s) outside every closed-form validity window.
struct WindowError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Argument outside the implemented range of a special function.
struct UnsupportedRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Iteration failed to converge, or every restart failed.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two points met during a descent with s >= 0; the restart is abandoned.
struct CollisionError : NumericError {
  using NumericError::NumericError;
};

// No sign change inside a root bracket.
struct BracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace riesz
