// Error types shared across the toolkit.
#pragma once

#include <stdexcept>
#include <string>

namespace bo {

// Incompatible truncations / array lengths.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A spectral quantity could not be trusted at the current truncation
// (negative gap beyond roundoff, nonpositive product factor, ...).
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Linear-algebra failures: eigensolver breakdown, near-singular resolvent.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Newton inversion did not reach the requested residual.
struct InverseError : std::runtime_error {
  InverseError(const std::string& msg, double residual)
      : std::runtime_error(msg), best_residual(residual) {}
  double best_residual;
};

// Time stepping blew up or a flow composition failed.
struct FlowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bo
