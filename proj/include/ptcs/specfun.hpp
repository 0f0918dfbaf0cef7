#ifndef PTCS_SPECFUN_HPP
#define PTCS_SPECFUN_HPP

// Gamma family, classical orthogonal polynomials and the confluent limit
// 0F1. Bessel functions live in bessel.hpp.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "ptcs/error.hpp"
#include "ptcs/results.hpp"

namespace ptcs::specfun {

/// ln Gamma(x) for x > 0.
inline double log_gamma(double x) {
  ptcs::detail::require_finite(x, "log_gamma: argument must be finite");
  ptcs::detail::require(x > 0.0, "log_gamma: argument must be positive");
  return std::lgamma(x);
}

/// Gamma(x) for x > 0. Overflows to +inf beyond x ~ 171.6.
inline double gamma(double x) {
  ptcs::detail::require_finite(x, "gamma: argument must be finite");
  ptcs::detail::require(x > 0.0, "gamma: argument must be positive");
  return std::tgamma(x);
}

/// Rising factorial (a)_n = a(a+1)...(a+n-1), product form; (a)_0 = 1.
inline double pochhammer(double a, unsigned n) {
  double p = 1.0;
  for (unsigned k = 0; k < n; ++k) p *= a + k;
  return p;
}

/// ln((a)_n / n!) for a > 0, via log_gamma.
inline double log_pochhammer_over_factorial(double a, unsigned n) {
  return std::lgamma(a + n) - std::lgamma(a) - std::lgamma(n + 1.0);
}

/// Laguerre polynomial L_n^{(alpha)}(x) by the forward three-term recurrence
///   (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}.
/// Stable for alpha > -1 and moderate x (x <~ 4n is the oscillatory region
/// where both recurrence solutions have comparable size).
inline double laguerre(unsigned n, double alpha, double x) {
  ptcs::detail::require_finite(x, "laguerre: x must be finite");
  ptcs::detail::require(alpha > -1.0, "laguerre: alpha must exceed -1");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = alpha + 1.0 - x;
  for (unsigned k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * curr - (k + alpha) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

/// L_0^{(alpha)}(x), ..., L_{count-1}^{(alpha)}(x).
inline std::vector<double> laguerre_sequence(std::size_t count, double alpha, double x) {
  ptcs::detail::require(alpha > -1.0, "laguerre_sequence: alpha must exceed -1");
  std::vector<double> out(count);
  if (count == 0) return out;
  out[0] = 1.0;
  if (count > 1) out[1] = alpha + 1.0 - x;
  for (std::size_t k = 1; k + 1 < count; ++k) {
    out[k + 1] = ((2.0 * k + 1.0 + alpha - x) * out[k] - (k + alpha) * out[k - 1]) / (k + 1.0);
  }
  return out;
}

namespace detail {
inline double clamp_unit(double u, const char* what) {
  ptcs::detail::require_finite(u, what);
  constexpr double slack = 64 * 2.220446049250313e-16;
  ptcs::detail::require(std::fabs(u) <= 1.0 + slack, what);
  return u > 1.0 ? 1.0 : (u < -1.0 ? -1.0 : u);
}
}  // namespace detail

/// Gegenbauer polynomial C_n^{lambda}(u), lambda > 0, |u| <= 1, by
///   (k+1) C_{k+1} = 2(k+lambda) u C_k - (k+2 lambda-1) C_{k-1}.
inline double gegenbauer(unsigned n, double lambda, double u) {
  ptcs::detail::require(lambda > 0.0, "gegenbauer: lambda must be positive");
  u = detail::clamp_unit(u, "gegenbauer: |u| must not exceed 1");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 2.0 * lambda * u;
  for (unsigned k = 1; k < n; ++k) {
    const double next = (2.0 * (k + lambda) * u * curr - (k + 2.0 * lambda - 1.0) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

/// C_0^{lambda}(u), ..., C_{count-1}^{lambda}(u).
inline std::vector<double> gegenbauer_sequence(std::size_t count, double lambda, double u) {
  ptcs::detail::require(lambda > 0.0, "gegenbauer_sequence: lambda must be positive");
  u = detail::clamp_unit(u, "gegenbauer_sequence: |u| must not exceed 1");
  std::vector<double> out(count);
  if (count == 0) return out;
  out[0] = 1.0;
  if (count > 1) out[1] = 2.0 * lambda * u;
  for (std::size_t k = 1; k + 1 < count; ++k) {
    out[k + 1] = (2.0 * (k + lambda) * u * out[k] - (k + 2.0 * lambda - 1.0) * out[k - 1]) / (k + 1.0);
  }
  return out;
}

/// Truncation rule shared by the ascending series in this library: stop once
/// three consecutive terms are below 1e-16 of the partial sum.
class SeriesStop {
public:
  bool update(double term_magnitude, double sum_magnitude) {
    if (term_magnitude <= 1e-16 * sum_magnitude) {
      ++quiet_;
    } else {
      quiet_ = 0;
    }
    return quiet_ >= 3;
  }

private:
  int quiet_ = 0;
};

/// Confluent limit function 0F1(;c;w) = sum_k w^k / ((c)_k k!), with a
/// ratio bound on the discarded tail.
inline SeriesResult<std::complex<double>> hyp0f1_series(double c, std::complex<double> w) {
  ptcs::detail::require_finite(c, "hyp0f1: c must be finite");
  ptcs::detail::require(!(c <= 0.0 && c == std::floor(c)), "hyp0f1: c must not be a nonpositive integer");
  std::complex<double> term = 1.0;
  std::complex<double> sum = 1.0;
  SeriesStop stop;
  const double aw = std::abs(w);
  constexpr std::size_t max_terms = 20000;
  for (std::size_t k = 0; k < max_terms; ++k) {
    const double denom = (c + k) * (k + 1.0);
    ptcs::detail::require(denom != 0.0, "hyp0f1: pole of 1/Gamma(c+k)");
    term *= w / denom;
    sum += term;
    if (stop.update(std::abs(term), std::abs(sum))) {
      const double ratio = aw / std::fabs((c + k + 1.0) * (k + 2.0));
      const double tail = ratio < 1.0 ? std::abs(term) * ratio / (1.0 - ratio) : std::abs(term);
      return {sum, k + 2, tail};
    }
  }
  throw ConvergenceError("hyp0f1: series did not converge", sum, std::abs(term));
}

inline std::complex<double> hyp0f1(double c, std::complex<double> w) {
  return hyp0f1_series(c, w).value;
}

}  // namespace ptcs::specfun

#endif  // PTCS_SPECFUN_HPP
