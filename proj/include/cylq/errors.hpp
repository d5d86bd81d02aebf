#pragma once

#include <stdexcept>
#include <string>

namespace cylq {

/// Raised when an input or configuration violates a stated invariant.
/// The message names the violated invariant. Maps to CLI exit code 1.
class validation_error : public std::invalid_argument {
 public:
  explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an internal cross-check or convergence test fails
/// (truncation too low, quadrature not converged, eigensolver stalled).
/// Maps to CLI exit code 2.
class consistency_error : public std::runtime_error {
 public:
  explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cylq
