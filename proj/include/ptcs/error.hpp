#ifndef PTCS_ERROR_HPP
#define PTCS_ERROR_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace ptcs {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Iterative evaluation (quadrature, series, continued fraction) did not
/// reach the requested tolerance. Carries the best estimate obtained.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, std::complex<double> best, double error_estimate)
      : std::runtime_error(what), best_estimate(best), error_estimate(error_estimate) {}

  std::complex<double> best_estimate;
  double error_estimate;
};

/// A log-space quantity left the double range.
class OverflowError : public std::overflow_error {
public:
  OverflowError(const std::string& what, long index, double log_value)
      : std::overflow_error(what), index(index), log_value(log_value) {}

  long index;
  double log_value;
};

/// Two evaluation routes of the same closed form disagree, which signals a
/// complex-power branch inconsistency.
class BranchError : public std::runtime_error {
public:
  BranchError(const std::string& what, double mismatch)
      : std::runtime_error(what), mismatch(mismatch) {}

  double mismatch;
};

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

inline void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(what);
}

}  // namespace detail
}  // namespace ptcs

#endif  // PTCS_ERROR_HPP
