#pragma once

#include <stdexcept>
#include <string>

namespace circlekit {

// Validation failures: bad inputs, contract violations at the call boundary.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numerical failures: well-formed inputs on which the algorithm cannot
// deliver its contract (non-convergence, ill-conditioning, failed verdicts).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotNonnegative : ValidationError {
  using ValidationError::ValidationError;
};
struct IllConditioned : NumericalError {
  using NumericalError::NumericalError;
};
struct OutsideDisk : ValidationError {
  using ValidationError::ValidationError;
};
struct NotAbsolutelyContinuous : ValidationError {
  using ValidationError::ValidationError;
};
struct NonContractive : ValidationError {
  using ValidationError::ValidationError;
};
struct NotHermitian : ValidationError {
  using ValidationError::ValidationError;
};
struct DimensionMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct SingularMetric : NumericalError {
  using NumericalError::NumericalError;
};
struct NotContractivelyContained : NumericalError {
  using NumericalError::NumericalError;
};
struct NotContraction : ValidationError {
  using ValidationError::ValidationError;
};
struct NotConverged : NumericalError {
  using NumericalError::NumericalError;
};
struct IllPosed : NumericalError {
  using NumericalError::NumericalError;
};
struct SingularReference : ValidationError {
  using ValidationError::ValidationError;
};

}  // namespace circlekit
