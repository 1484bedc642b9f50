#pragma once

#include <stdexcept>
#include <string>

namespace fraclangevin {

/// Raised when an argument violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cholesky met a nonpositive pivot.
class DecompositionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// R/S analysis found no prefix with a positive standard deviation.
class DegenerateSeries : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A kernel integral in the A_H estimator is numerically zero at time `t`.
class DegenerateDenominator : public std::runtime_error {
 public:
  DegenerateDenominator(double t, const std::string& what)
      : std::runtime_error(what), time_(t) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace fraclangevin
