#pragma once

#include <stdexcept>

namespace pairwalk {

// Bad user input or a violated precondition. CLI exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical contract failed (unitarity defect, norm drift, solver
// non-convergence). Never downgraded to a warning. CLI exit code 2.
class NumericsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem failure. CLI exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pairwalk
