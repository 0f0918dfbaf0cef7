#ifndef PTCS_IDENTITY_HPP
#define PTCS_IDENTITY_HPP

// The eps -> 0+ resolution of the identity. Integrating |z><z| against the
// resolving measure gives the smoothing operator
//   O_{nu,eps}[phi] = sum_n e^{-n eps} <phi_n|phi> phi_n,
// whose kernel is the Gegenbauer Poisson kernel
//   P_nu(e^{-eps}; x, y) = sum_n e^{-n eps} omega_n C_n^{nu+1}(cos x) C_n^{nu+1}(cos y).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <numbers>
#include <span>
#include <vector>

#include "ptcs/error.hpp"
#include "ptcs/grid.hpp"
#include "ptcs/quad.hpp"
#include "ptcs/results.hpp"
#include "ptcs/spt.hpp"

namespace ptcs::identity {

using cplx = std::complex<double>;
using Function = std::function<cplx(double)>;

/// ln omega_n, omega_n = Gamma(nu+1)^2 2^{2nu+1} n! (n+nu+1) / (pi Gamma(n+2nu+2)).
inline double log_omega(double nu, unsigned n) {
  ptcs::detail::require(std::isfinite(nu) && nu > -1.0, "omega: nu must exceed -1");
  return 2.0 * std::lgamma(nu + 1.0) + (2.0 * nu + 1.0) * std::numbers::ln2 + std::lgamma(n + 1.0) +
         std::log(n + nu + 1.0) - std::log(std::numbers::pi) - std::lgamma(n + 2.0 * nu + 2.0);
}

inline double omega(double nu, unsigned n) { return std::exp(log_omega(nu, n)); }

/// Default series length ceil(40/eps), capped at 5000: e^{-40} leaves the
/// polynomially growing omega_n C_n C_n far below double resolution.
inline std::size_t default_truncation(double epsilon) {
  ptcs::detail::require(std::isfinite(epsilon) && epsilon > 0.0, "truncation: eps must be positive");
  return static_cast<std::size_t>(std::min(5000.0, std::ceil(40.0 / epsilon)));
}

struct PoissonKernelSpec {
  double nu = 0.0;
  double epsilon = 0.1;
  std::size_t truncation = 0;  // 0 selects default_truncation(epsilon)

  void validate() const {
    ptcs::detail::require(std::isfinite(nu) && nu > -1.0, "PoissonKernelSpec: nu must exceed -1");
    ptcs::detail::require(std::isfinite(epsilon) && epsilon > 0.0, "PoissonKernelSpec: eps must be positive");
  }
  [[nodiscard]] std::size_t terms() const { return truncation ? truncation : default_truncation(epsilon); }
};

namespace detail {

// C_0^lambda(u), ..., C_{count-1}^lambda(u) by the three-term recurrence.
inline void gegenbauer_run(double lambda, double u, std::span<double> out) {
  double prev = 1.0;
  double curr = 2.0 * lambda * u;
  for (std::size_t n = 0; n < out.size(); ++n) {
    if (n == 0) {
      out[n] = 1.0;
    } else if (n == 1) {
      out[n] = curr;
    } else {
      const double k = static_cast<double>(n - 1);
      const double next = (2.0 * (k + lambda) * u * curr - (k + 2.0 * lambda - 1.0) * prev) / (k + 1.0);
      prev = curr;
      curr = next;
      out[n] = curr;
    }
  }
}

}  // namespace detail

/// P_nu(e^{-eps}; x, .) with the x-dependent factors computed once, so a row
/// of kernel values costs one Gegenbauer pass per y.
class PoissonKernel {
public:
  PoissonKernel(const PoissonKernelSpec& spec, double x, double tol = 1e-10) : spec_(spec), tol_(tol) {
    spec_.validate();
    ptcs::detail::require(x > 0.0 && x < std::numbers::pi, "poisson_kernel: x must lie in (0, pi)");
    const std::size_t count = spec_.terms();
    ptcs::detail::require(count >= 1, "poisson_kernel: truncation must be at least 1");
    a_.resize(count);
    c_.resize(count);
    detail::gegenbauer_run(spec_.nu + 1.0, std::cos(x), a_);
    for (std::size_t n = 0; n < count; ++n) {
      a_[n] *= std::exp(log_omega(spec_.nu, static_cast<unsigned>(n)) - spec_.epsilon * static_cast<double>(n));
    }
  }

  /// Series value and the tail estimate from the geometric decay e^{-eps}.
  /// Throws ConvergenceError when weight * tail exceeds tol * max(1, weight |P|);
  /// `weight` is the factor the caller multiplies P by, so near-wall values
  /// that are later damped by (sin x sin y)^{nu+1} are judged by their effect.
  [[nodiscard]] SeriesResult<double> operator()(double y, double weight = 1.0) const {
    ptcs::detail::require(y > 0.0 && y < std::numbers::pi, "poisson_kernel: y must lie in (0, pi)");
    detail::gegenbauer_run(spec_.nu + 1.0, std::cos(y), c_);
    const std::size_t count = a_.size();
    double sum = 0.0;
    double recent = 0.0;
    const std::size_t window = std::min<std::size_t>(16, count);
    for (std::size_t n = 0; n < count; ++n) {
      const double t = a_[n] * c_[n];
      sum += t;
      if (n + window >= count) recent = std::max(recent, std::fabs(t));
    }
    const double rho = std::exp(-spec_.epsilon);
    const double tail = recent * rho / (1.0 - rho);
    if (weight * tail > tol_ * std::max(1.0, weight * std::fabs(sum))) {
      throw ConvergenceError("poisson_kernel: truncation too short for this eps", sum, tail);
    }
    return {sum, count, tail};
  }

private:
  PoissonKernelSpec spec_;
  double tol_;
  std::vector<double> a_;
  mutable std::vector<double> c_;
};

inline SeriesResult<double> poisson_kernel(const PoissonKernelSpec& spec, double x, double y, double tol = 1e-10) {
  return PoissonKernel(spec, x, tol)(y);
}

/// <phi_n|phi> = int_0^pi phi_n(x) phi(x) dx (phi_n is real).
inline cplx projection(double nu, unsigned n, const Function& phi, double tol = 1e-12) {
  const spt::SPTConfig cfg{nu};
  return quad::integrate_finite([&](double x) { return spt::eigenstate(cfg, n, x) * phi(x); }, 0.0,
                                std::numbers::pi, quad::Tolerance(tol, tol))
      .value;
}

/// Spectral route: projections are computed once, then
/// O[phi](x) = sum_n e^{-n eps} <phi_n|phi> phi_n(x). By Bessel's inequality
/// every later projection is bounded by the norm not yet accounted for, so
/// the sum stops once e^{-n eps} times that remainder is below `tol` (or at
/// the default truncation).
class SpectralSmoothing {
public:
  SpectralSmoothing(double nu, double epsilon, const Function& phi, double tol = 1e-12) {
    PoissonKernelSpec{nu, epsilon}.validate();
    const std::size_t cap = default_truncation(epsilon);
    double remaining = quad::integrate_finite([&](double x) { return std::norm(phi(x)); }, 0.0, std::numbers::pi,
                                              quad::Tolerance(1e-300, 1e-14))
                           .value;
    const double floor = 1e-13 * remaining;  // quadrature noise in the running difference
    for (std::size_t n = 0; n < cap; ++n) {
      const double damp = std::exp(-epsilon * static_cast<double>(n));
      if (damp * std::sqrt(std::max(remaining, 0.0) + floor) < tol) break;
      const cplx a = projection(nu, static_cast<unsigned>(n), phi, 0.01 * tol);
      coeffs_.push_back(a * damp);
      remaining -= std::norm(a);
    }
    basis_ = std::make_unique<spt::EigenBasis>(spt::SPTConfig{nu}, coeffs_.size());
    values_.resize(coeffs_.size());
  }

  [[nodiscard]] cplx operator()(double x) const {
    basis_->evaluate(x, values_);
    cplx sum = 0.0;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) sum += coeffs_[n] * values_[n];
    return sum;
  }

  [[nodiscard]] std::size_t terms() const { return coeffs_.size(); }
  [[nodiscard]] std::span<const cplx> damped_projections() const { return coeffs_; }

private:
  std::vector<cplx> coeffs_;
  std::unique_ptr<spt::EigenBasis> basis_;
  mutable std::vector<double> values_;
};

/// Kernel route: O[phi](x) = (sin x)^{nu+1} int_0^pi P(x, y) (sin y)^{nu+1} phi(y) dy,
/// i.e. the integral of P against h(y) = (sin y)^{-nu-1} phi(y) in dm(y) = (sin y)^{2nu+2} dy.
inline cplx smoothing_by_kernel(double nu, double epsilon, const Function& phi, double x, double tol = 1e-10) {
  ptcs::detail::require(x >= 0.0 && x <= std::numbers::pi, "apply_smoothing: x must lie in [0, pi]");
  if (x == 0.0 || x == std::numbers::pi) return 0.0;
  const PoissonKernel kernel({nu, epsilon}, x);
  const double lambda = nu + 1.0;
  auto integrand = [&](double y) -> cplx {
    if (y <= 0.0 || y >= std::numbers::pi) return 0.0;
    const double w = std::pow(std::sin(y), lambda);
    return kernel(y, w * std::pow(std::sin(x), lambda)).value * w * phi(y);
  };
  const auto r = quad::integrate_finite(integrand, 0.0, std::numbers::pi, quad::Tolerance(tol, tol));
  return std::pow(std::sin(x), lambda) * r.value;
}

enum class Route { Spectral, Kernel };

/// O_{nu,eps}[phi](x) by either route.
inline cplx apply_smoothing(double nu, double epsilon, const Function& phi, double x, Route route = Route::Spectral) {
  ptcs::detail::require(x >= 0.0 && x <= std::numbers::pi, "apply_smoothing: x must lie in [0, pi]");
  if (route == Route::Kernel) return smoothing_by_kernel(nu, epsilon, phi, x);
  return SpectralSmoothing(nu, epsilon, phi)(x);
}

struct ConvergenceRow {
  double epsilon;
  double sup_error;  // over grid points in [0.1, pi - 0.1]
  double l2_error;   // trapezoid rule over the whole grid
};

/// ||O_{nu,eps}[phi] - phi|| along a decreasing eps schedule, on a grid in [0, pi].
inline std::vector<ConvergenceRow> convergence_study(double nu, const Function& phi,
                                                     std::span<const double> eps_schedule, const GridSpec& grid) {
  ptcs::detail::require(!eps_schedule.empty(), "convergence_study: empty schedule");
  for (std::size_t i = 0; i < eps_schedule.size(); ++i) {
    ptcs::detail::require(eps_schedule[i] > 0.0, "convergence_study: eps must be positive");
    if (i > 0) ptcs::detail::require(eps_schedule[i] < eps_schedule[i - 1], "convergence_study: schedule must decrease");
  }
  const auto xs = grid.points();
  ptcs::detail::require(xs.front() >= 0.0 && xs.back() <= std::numbers::pi, "convergence_study: grid must lie in [0, pi]");
  std::vector<cplx> target(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) target[i] = phi(xs[i]);
  std::vector<ConvergenceRow> rows;
  for (double eps : eps_schedule) {
    const SpectralSmoothing op(nu, eps, phi);
    double sup = 0.0;
    double l2 = 0.0;
    double prev = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double d = std::abs(op(xs[i]) - target[i]);
      if (xs[i] >= 0.1 && xs[i] <= std::numbers::pi - 0.1) sup = std::max(sup, d);
      if (i > 0) l2 += 0.5 * (xs[i] - xs[i - 1]) * (d * d + prev * prev);
      prev = d;
    }
    rows.push_back({eps, sup, std::sqrt(l2)});
  }
  return rows;
}

}  // namespace ptcs::identity

#endif  // PTCS_IDENTITY_HPP
