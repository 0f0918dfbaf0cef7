#ifndef PTCS_LAGHANKEL_HPP
#define PTCS_LAGHANKEL_HPP

// Laguerre functions  L_n(x) = x^{nu+1/2} e^{-x/2} L_n^{(2nu+1)}(x)  and their
// Hankel-type representation
//   L_n(x) = (2^{2nu+2}/sqrt(pi)) Gamma(nu+1) (n+nu+1)
//            int_0^inf J_{nu+1/2}(xs/2) C_n^{nu+1}((s^2-1)/(s^2+1)) s^{nu+3/2} / (s^2+1)^{nu+2} ds,
// with the generating-function identities that connect the two sides.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "ptcs/bessel.hpp"
#include "ptcs/error.hpp"
#include "ptcs/quad.hpp"
#include "ptcs/results.hpp"
#include "ptcs/specfun.hpp"

namespace ptcs::laghankel {

using cplx = std::complex<double>;

struct LaguerreFunctionSpec {
  unsigned n = 0;
  double nu = 0.5;
  double x = 1.0;

  void validate() const {
    ptcs::detail::require(std::isfinite(nu) && nu > -0.5, "LaguerreFunctionSpec: nu must exceed -1/2");
    ptcs::detail::require(std::isfinite(x) && x >= 0.0, "LaguerreFunctionSpec: x must be nonnegative");
  }
};

inline double laguerre_function(const LaguerreFunctionSpec& s) {
  s.validate();
  if (s.x == 0.0) return 0.0;
  return std::exp((s.nu + 0.5) * std::log(s.x) - 0.5 * s.x) * specfun::laguerre(s.n, 2.0 * s.nu + 1.0, s.x);
}

/// The right-hand side of the Hankel representation by quadrature. The head
/// [0, s0] is integrated adaptively; beyond s0, where C_n has stopped
/// oscillating, the Bessel factor's half-periods are summed with tail
/// acceleration. `tol` is absolute on the returned value.
inline QuadResult<double> hankel_representation(const LaguerreFunctionSpec& s, double tol = 1e-9) {
  s.validate();
  ptcs::detail::require(s.nu > 0.0, "hankel_representation: nu must be positive");
  if (s.x == 0.0) return {0.0, 0.0, 0};
  const double nu = s.nu;
  const double lambda = nu + 1.0;
  const double beta = nu + 0.5;
  const double omega = 0.5 * s.x;
  const double log_pref = (2.0 * nu + 2.0) * std::numbers::ln2 - 0.5 * std::log(std::numbers::pi) +
                          std::lgamma(nu + 1.0) + std::log(s.n + nu + 1.0);
  const double pref = std::exp(log_pref);
  auto f = [&](double t) {
    if (t == 0.0) return 0.0;
    const double t2 = t * t;
    const double y = (t2 - 1.0) / (t2 + 1.0);
    return specfun::bessel_j(beta, omega * t) * specfun::gegenbauer(s.n, lambda, y) *
           std::exp((nu + 1.5) * std::log(t) - (nu + 2.0) * std::log1p(t2));
  };
  // the largest zero of C_n^lambda(y(s)) sits near s ~ 2n/j_{lambda-1/2,1}
  const double start = std::max({4.0, 2.0 * s.n + 2.0, beta / omega});
  auto r = quad::integrate_oscillatory(f, start, std::numbers::pi / omega, quad::Tolerance(tol / pref, 1e-12));
  return {pref * r.value, pref * r.abs_error, r.evaluations};
}

// ---------------------------------------------------------------------------
// Generating functions

/// A closed form with the matching truncated series, for side-by-side checks.
template <typename T = double>
struct GeneratingPair {
  T closed;
  SeriesResult<T> series;
};

/// sum_n t^n L_n^{(alpha)}(x) = (1-t)^{-alpha-1} exp(-xt/(1-t)).
inline GeneratingPair<double> laguerre_generating_sum(double alpha, double t, double x) {
  ptcs::detail::require(alpha > -1.0, "laguerre_generating_sum: alpha must exceed -1");
  ptcs::detail::require(std::fabs(t) < 1.0, "laguerre_generating_sum: |t| must be below 1");
  ptcs::detail::require(x >= 0.0, "laguerre_generating_sum: x must be nonnegative");
  const double closed = std::pow(1.0 - t, -alpha - 1.0) * std::exp(-x * t / (1.0 - t));
  double prev = 1.0, curr = alpha + 1.0 - x, tn = 1.0;
  auto term = [&](std::size_t n) {
    double l;
    if (n == 0) {
      l = 1.0;
    } else if (n == 1) {
      l = curr;
    } else {
      const double k = static_cast<double>(n - 1);
      const double next = ((2.0 * k + 1.0 + alpha - x) * curr - (k + alpha) * prev) / (k + 1.0);
      prev = curr;
      curr = next;
      l = curr;
    }
    if (n > 0) tn *= t;
    return tn * l;
  };
  return {closed, quad::sum_series(term, quad::Tolerance(1e-300, 1e-15))};
}

/// sum_n t^n L_n(x) for the Laguerre functions, closed form
/// (1-t)^{-2nu-2} x^{nu+1/2} exp(-(x/2)(1+t)/(1-t)); t may be complex.
inline cplx laguerre_function_generating(double nu, cplx t, double x) {
  ptcs::detail::require(nu > -0.5, "laguerre_function_generating: nu must exceed -1/2");
  ptcs::detail::require(std::abs(t) < 1.0, "laguerre_function_generating: |t| must be below 1");
  ptcs::detail::require(x >= 0.0, "laguerre_function_generating: x must be nonnegative");
  if (x == 0.0) return 0.0;
  const cplx one_minus = 1.0 - t;
  return std::exp(-(2.0 * nu + 2.0) * std::log(one_minus) + (nu + 0.5) * std::log(x) -
                  0.5 * x * (1.0 + t) / one_minus);
}

inline GeneratingPair<double> laguerre_function_generating_sum(double nu, double t, double x) {
  const double closed = laguerre_function_generating(nu, t, x).real();
  double tn = 1.0;
  auto term = [&](std::size_t n) {
    if (n > 0) tn *= t;
    return tn * laguerre_function({static_cast<unsigned>(n), nu, x});
  };
  return {closed, quad::sum_series(term, quad::Tolerance(1e-300, 1e-15))};
}

/// sum_n t^n C_n^lambda(y) = (1 - 2yt + t^2)^{-lambda}.
inline double gegenbauer_generating(double lambda, double t, double y) {
  ptcs::detail::require(lambda > 0.0, "gegenbauer_generating: lambda must be positive");
  ptcs::detail::require(std::fabs(t) < 1.0, "gegenbauer_generating: |t| must be below 1");
  ptcs::detail::require(y >= -1.0 && y <= 1.0, "gegenbauer_generating: y must lie in [-1, 1]");
  return std::pow(1.0 - 2.0 * y * t + t * t, -lambda);
}

/// sum_n (n + 2 lambda) t^n C_n^lambda(y) = 2 lambda (1 - ty) / (1 - 2yt + t^2)^{lambda+1}.
inline double gegenbauer_generating_shifted(double lambda, double t, double y) {
  ptcs::detail::require(lambda > 0.0, "gegenbauer_generating: lambda must be positive");
  ptcs::detail::require(std::fabs(t) < 1.0, "gegenbauer_generating: |t| must be below 1");
  ptcs::detail::require(y >= -1.0 && y <= 1.0, "gegenbauer_generating: y must lie in [-1, 1]");
  return 2.0 * lambda * (1.0 - t * y) / std::pow(1.0 - 2.0 * y * t + t * t, lambda + 1.0);
}

/// sum_n (n + lambda) t^n C_n^lambda(y): the shifted sum minus lambda times
/// the plain one, which simplifies to lambda (1 - t^2) / (1 - 2yt + t^2)^{lambda+1}.
inline GeneratingPair<double> gegenbauer_weighted_generating_sum(double lambda, double t, double y) {
  const double closed = gegenbauer_generating_shifted(lambda, t, y) - lambda * gegenbauer_generating(lambda, t, y);
  double prev = 1.0, curr = 2.0 * lambda * y, tn = 1.0;
  auto term = [&](std::size_t n) {
    double c;
    if (n == 0) {
      c = 1.0;
    } else if (n == 1) {
      c = curr;
    } else {
      const double k = static_cast<double>(n - 1);
      const double next = (2.0 * (k + lambda) * y * curr - (k + 2.0 * lambda - 1.0) * prev) / (k + 1.0);
      prev = curr;
      curr = next;
      c = curr;
    }
    if (n > 0) tn *= t;
    return (static_cast<double>(n) + lambda) * tn * c;
  };
  return {closed, quad::sum_series(term, quad::Tolerance(1e-300, 1e-15))};
}

/// The weighted sum at lambda = nu + 1, y = (s^2-1)/(s^2+1), written as
/// (nu+1)(1-t^2)(s^2+1)^{nu+2} / ((1-t)^2 s^2 + (1+t)^2)^{nu+2}.
inline double gegenbauer_weighted_at_s(double nu, double t, double s) {
  ptcs::detail::require(nu > -1.0, "gegenbauer_weighted_at_s: nu must exceed -1");
  ptcs::detail::require(std::fabs(t) < 1.0, "gegenbauer_weighted_at_s: |t| must be below 1");
  const double s2 = s * s;
  const double d = (1.0 - t) * (1.0 - t) * s2 + (1.0 + t) * (1.0 + t);
  return (nu + 1.0) * (1.0 - t * t) * std::pow((s2 + 1.0) / d, nu + 2.0);
}

// ---------------------------------------------------------------------------
// Watson's integral

struct WatsonResult {
  QuadResult<double> lhs;
  double rhs;
};

/// u^eta a^{beta-eta} K_{beta-eta}(ua) / (2^eta Gamma(eta+1)).
inline double watson_closed(double beta, double eta, double u, double a) {
  ptcs::detail::require(beta > -1.0 && beta < 2.0 * eta + 1.5, "watson: need -1 < beta < 2 eta + 3/2");
  ptcs::detail::require(u > 0.0 && a > 0.0, "watson: u and a must be positive");
  return std::exp(eta * std::log(u) + (beta - eta) * std::log(a) - eta * std::numbers::ln2 - std::lgamma(eta + 1.0)) *
         specfun::bessel_k(beta - eta, u * a);
}

/// int_0^inf J_beta(yu) y^{beta+1} / (y^2 + a^2)^{eta+1} dy by quadrature, with its closed form.
inline WatsonResult watson_integral(double beta, double eta, double u, double a,
                                    quad::Tolerance tol = quad::Tolerance(1e-10, 1e-12)) {
  const double rhs = watson_closed(beta, eta, u, a);
  auto f = [&](double y) {
    if (y == 0.0) return 0.0;
    return specfun::bessel_j(beta, y * u) * std::exp((beta + 1.0) * std::log(y) - (eta + 1.0) * std::log(y * y + a * a));
  };
  const double start = std::max({a, (beta + 1.0) / u, 1.0});
  return {quad::integrate_oscillatory(f, start, std::numbers::pi / u, tol), rhs};
}

/// sum_n t^n (Hankel side) after summing under the integral: the prefactor
/// (2^{2nu+2}/sqrt(pi)) Gamma(nu+2) (1-t^2)/(1-t)^{2nu+4} times Watson's
/// integral with beta = nu+1/2, eta = nu+1, u = x/2, a = (1+t)/(1-t).
/// `by_quadrature` selects the quadrature side of Watson's formula.
inline double generating_sum_via_watson(double nu, double t, double x, bool by_quadrature = false) {
  ptcs::detail::require(nu > -0.5, "generating_sum_via_watson: nu must exceed -1/2");
  ptcs::detail::require(std::fabs(t) < 1.0, "generating_sum_via_watson: |t| must be below 1");
  ptcs::detail::require(x > 0.0, "generating_sum_via_watson: x must be positive");
  const double a = (1.0 + t) / (1.0 - t);
  const double pref = std::exp((2.0 * nu + 2.0) * std::numbers::ln2 - 0.5 * std::log(std::numbers::pi) +
                               std::lgamma(nu + 2.0) - (2.0 * nu + 4.0) * std::log1p(-t)) *
                      (1.0 - t * t);
  const double w = by_quadrature ? watson_integral(nu + 0.5, nu + 1.0, 0.5 * x, a, quad::Tolerance(1e-300, 1e-12)).lhs.value
                                 : watson_closed(nu + 0.5, nu + 1.0, 0.5 * x, a);
  return pref * w;
}

/// Taylor coefficients of t -> sum_n t^n L_n(x) recovered from its closed
/// form by the trapezoid rule on |t| = radius (discrete Cauchy integral).
/// Aliasing from index n + samples is damped by radius^samples.
inline std::vector<double> extract_generating_coefficients(double nu, double x, std::size_t count,
                                                           double radius = 0.5, std::size_t samples = 64) {
  ptcs::detail::require(radius > 0.0 && radius < 1.0, "extract_generating_coefficients: radius must lie in (0, 1)");
  ptcs::detail::require(samples > count, "extract_generating_coefficients: need more samples than coefficients");
  std::vector<cplx> values(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    const double phase = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
    values[k] = laguerre_function_generating(nu, std::polar(radius, phase), x);
  }
  std::vector<double> out(count);
  for (std::size_t n = 0; n < count; ++n) {
    cplx acc = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
      const double phase = -2.0 * std::numbers::pi * static_cast<double>(n * k) / static_cast<double>(samples);
      acc += values[k] * std::polar(1.0, phase);
    }
    out[n] = acc.real() / (static_cast<double>(samples) * std::pow(radius, static_cast<double>(n)));
  }
  return out;
}

}  // namespace ptcs::laghankel

#endif  // PTCS_LAGHANKEL_HPP
