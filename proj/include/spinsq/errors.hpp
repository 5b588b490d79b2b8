#pragma once

#include <stdexcept>

namespace spinsq {

// Precondition violation: an argument lies outside the operation's domain.
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request exceeds a hard size limit (e.g. the dense-validation cap).
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Solver breakdown: non-convergence, failed residual check, overflow guard.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Failure reading or writing files.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spinsq
