#ifndef BICYL_ERRORS_HPP
#define BICYL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bicyl {

/// Raised for cylinders with a degenerate axis, non-positive radius or
/// non-finite coordinates.
class InvalidCylinder : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the mathematical domain of the operation
/// (e.g. an intersection depth outside [0, 1]).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configuration value (sample count, tolerance, level count) is out of range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The integrand returned NaN inside the integration interval.
class IntegrandDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Quadrature did not reach the requested tolerance. Carries the best
/// estimate seen so far.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double best_estimate, double err_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate), err_estimate_(err_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double err_estimate() const noexcept { return err_estimate_; }

 private:
  double best_estimate_;
  double err_estimate_;
};

}  // namespace bicyl

#endif  // BICYL_ERRORS_HPP
