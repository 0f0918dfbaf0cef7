#ifndef PTCS_EPSCS_HPP
#define PTCS_EPSCS_HPP

// Epsilon coherent states of the symmetric Poschl-Teller oscillator:
//   |z; (gamma, nu); eps> = N^{-1/2} sum_n e^{-in arg z} L_n^{(gamma-1)}(|z|^2) / sqrt(sigma(n)) |phi_n^nu>.
// Coefficients, the normalization N, the overlap kernel (Hille-Hardy route),
// position-space wavefunctions and the coherent-state transform.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <type_traits>
#include <span>
#include <vector>

#include "ptcs/bessel.hpp"
#include "ptcs/error.hpp"
#include "ptcs/grid.hpp"
#include "ptcs/quad.hpp"
#include "ptcs/results.hpp"
#include "ptcs/specfun.hpp"
#include "ptcs/spt.hpp"

namespace ptcs::epscs {

using cplx = std::complex<double>;

struct Params {
  double gamma = 2.0;
  double nu = 0.0;
  double epsilon = 0.1;

  /// gamma = 2(nu+1), the family that has a closed-form wavefunction.
  static Params matched(double nu, double epsilon) { return {2.0 * (nu + 1.0), nu, epsilon}; }

  void validate(bool need_positive_eps = true) const {
    ptcs::detail::require(std::isfinite(gamma) && gamma > 0.0, "Params: gamma must be positive");
    ptcs::detail::require(std::isfinite(nu) && nu > -1.0, "Params: nu must exceed -1");
    ptcs::detail::require(std::isfinite(epsilon) && epsilon >= 0.0, "Params: epsilon must be nonnegative");
    if (need_positive_eps) ptcs::detail::require(epsilon > 0.0, "Params: epsilon must be positive");
  }
};

/// Label z = r e^{i theta}, theta reduced to [0, 2 pi); theta = 0 when r = 0.
class PhasePoint {
public:
  PhasePoint() = default;
  PhasePoint(double r, double theta) : r_(r), theta_(theta) {
    ptcs::detail::require(std::isfinite(r) && r >= 0.0, "PhasePoint: r must be a nonnegative real");
    ptcs::detail::require_finite(theta, "PhasePoint: theta must be finite");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    theta_ = std::fmod(theta_, two_pi);
    if (theta_ < 0.0) theta_ += two_pi;
    if (theta_ >= two_pi) theta_ = 0.0;
    if (r_ == 0.0) theta_ = 0.0;
  }

  [[nodiscard]] double r() const { return r_; }
  [[nodiscard]] double theta() const { return theta_; }
  [[nodiscard]] double r2() const { return r_ * r_; }
  [[nodiscard]] cplx z() const { return std::polar(r_, theta_); }

private:
  double r_ = 0.0;
  double theta_ = 0.0;
};

struct CSCoefficient {
  unsigned n;
  cplx value;
};

namespace detail {

// Sum of a series whose terms eventually decay like rho^n but may grow and
// oscillate (Laguerre factors) for a long stretch first. Stops once the
// magnitudes over the last `window` terms, extended geometrically with the
// known ratio rho, fall below rel_tol of the sum.
template <typename T>
auto sum_windowed(T&& term, double rho, double rel_tol, std::size_t window = 128, std::size_t max_terms = 400000)
    -> SeriesResult<std::decay_t<std::invoke_result_t<T&, std::size_t>>> {
  using V = std::decay_t<std::invoke_result_t<T&, std::size_t>>;
  V sum{};
  std::vector<double> mags;
  double recent = 0.0;
  for (std::size_t n = 0; n < max_terms; ++n) {
    const V t = term(n);
    const double m = std::abs(t);
    if (!std::isfinite(m)) throw ConvergenceError("series: non-finite term", ptcs::quad::detail::to_complex(sum), m);
    sum += t;
    mags.push_back(m);
    if (n + 1 < window) continue;
    // summed afresh: a running difference would keep rounding residue
    recent = 0.0;
    for (std::size_t j = n + 1 - window; j <= n; ++j) recent += mags[j];
    const double tail = recent / (static_cast<double>(window) * (1.0 - rho)) + m;
    if (tail <= rel_tol * std::abs(sum)) return {sum, n + 1, tail};
  }
  throw ConvergenceError("series: max_terms reached", ptcs::quad::detail::to_complex(sum), recent);
}

}  // namespace detail

/// ln sigma_{gamma,eps}(n) = ln((gamma)_n / n!) + ln(gamma/2 + n) + n eps.
inline double log_sigma(const Params& p, unsigned n) {
  p.validate(false);
  return specfun::log_pochhammer_over_factorial(p.gamma, n) + std::log(0.5 * p.gamma + n) + n * p.epsilon;
}

inline double sigma(const Params& p, unsigned n) {
  const double ls = log_sigma(p, n);
  if (ls > 709.0 || ls < -708.0) throw OverflowError("sigma: value leaves the double range", n, ls);
  return std::exp(ls);
}

/// e^{-in theta} L_n^{(gamma-1)}(r^2) / sqrt(sigma(n)).
inline cplx coefficient(const Params& p, const PhasePoint& z, unsigned n) {
  const double mag = specfun::laguerre(n, p.gamma - 1.0, z.r2()) * std::exp(-0.5 * log_sigma(p, n));
  return std::polar(1.0, -static_cast<double>(n) * z.theta()) * mag;
}

inline std::vector<CSCoefficient> cs_coefficients(const Params& p, const PhasePoint& z, std::size_t count) {
  p.validate();
  std::vector<CSCoefficient> out;
  out.reserve(count);
  const auto lag = specfun::laguerre_sequence(count, p.gamma - 1.0, z.r2());
  for (std::size_t n = 0; n < count; ++n) {
    const auto k = static_cast<unsigned>(n);
    const double mag = lag[n] * std::exp(-0.5 * log_sigma(p, k));
    out.push_back({k, std::polar(1.0, -static_cast<double>(n) * z.theta()) * mag});
  }
  return out;
}

/// Length of a series state: the smallest N with |c_N|^2 < threshold times
/// the partial norm, capped at `cap`. `capped` reports that the cap fired.
struct Truncation {
  std::size_t terms;
  bool capped;
};

inline Truncation truncation_order(const Params& p, const PhasePoint& z, double threshold = 1e-18,
                                   std::size_t cap = 2000) {
  p.validate();
  double norm = 0.0;
  double prev = 1.0;
  double curr = p.gamma - z.r2();  // L_1^{(gamma-1)}
  const double alpha = p.gamma - 1.0;
  const double x = z.r2();
  for (std::size_t n = 0; n < cap; ++n) {
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
    const double c2 = l * l * std::exp(-log_sigma(p, static_cast<unsigned>(n)));
    norm += c2;
    // need a few terms first: L_n(r^2) can vanish at isolated n
    if (n >= 3 && c2 < threshold * norm) return {n + 1, false};
  }
  return {cap, true};
}

inline std::vector<CSCoefficient> cs_coefficients(const Params& p, const PhasePoint& z) {
  return cs_coefficients(p, z, truncation_order(p, z).terms);
}

/// N(z) = sum_n L_n^{(gamma-1)}(r^2)^2 / sigma(n), summed until the
/// geometric tail estimate is below `rel_tol` of the sum.
inline SeriesResult<double> normalization_series(const Params& p, const PhasePoint& z, double rel_tol = 1e-16) {
  p.validate();
  const double alpha = p.gamma - 1.0;
  const double x = z.r2();
  double prev = 1.0;
  double curr = alpha + 1.0 - x;
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
    return l * l * std::exp(-log_sigma(p, static_cast<unsigned>(n)));
  };
  return detail::sum_windowed(term, std::exp(-p.epsilon), rel_tol);
}

// ---------------------------------------------------------------------------
// Hille-Hardy kernel

/// sum_n n! u^n / Gamma(n+alpha+1) L_n^{(alpha)}(xi) L_n^{(alpha)}(zeta), |u| < 1.
inline SeriesResult<cplx> hille_hardy_series(double alpha, double xi, double zeta, cplx u, double rel_tol = 1e-16) {
  ptcs::detail::require(alpha > -1.0, "hille_hardy: alpha must exceed -1");
  ptcs::detail::require(xi >= 0.0 && zeta >= 0.0, "hille_hardy: xi, zeta must be nonnegative");
  ptcs::detail::require(std::abs(u) < 1.0, "hille_hardy: |u| must be below 1");
  double lp_xi = 1.0, lc_xi = alpha + 1.0 - xi;
  double lp_ze = 1.0, lc_ze = alpha + 1.0 - zeta;
  cplx upow = 1.0;
  auto term = [&](std::size_t n) {
    double a, b;
    if (n == 0) {
      a = b = 1.0;
    } else if (n == 1) {
      a = lc_xi;
      b = lc_ze;
    } else {
      const double k = static_cast<double>(n - 1);
      const double nx = ((2.0 * k + 1.0 + alpha - xi) * lc_xi - (k + alpha) * lp_xi) / (k + 1.0);
      const double nz = ((2.0 * k + 1.0 + alpha - zeta) * lc_ze - (k + alpha) * lp_ze) / (k + 1.0);
      lp_xi = lc_xi;
      lc_xi = nx;
      lp_ze = lc_ze;
      lc_ze = nz;
      a = nx;
      b = nz;
    }
    if (n > 0) upow *= u;
    const double w = std::exp(std::lgamma(n + 1.0) - std::lgamma(n + alpha + 1.0));
    return upow * (w * a * b);
  };
  return detail::sum_windowed(term, std::abs(u), rel_tol);
}

namespace detail {

// Hille-Hardy right-hand side written as
//   (1-u)^{-alpha-1} exp(-(xi+zeta)u/(1-u)) R_alpha(w),  w = 2 sqrt(xi zeta u)/(1-u),
// with R_alpha(w) = (w/2)^{-alpha} I_alpha(w) even in w. Since Re(1-u) > 0
// for |u| < 1, every power is taken on the principal branch without a cut
// crossing, and the result equals the displayed form term by term.
inline cplx hille_hardy_reduced(double alpha, double xi, double zeta, cplx u) {
  const cplx one_minus = 1.0 - u;
  const cplx w = 2.0 * std::sqrt(xi * zeta) * std::sqrt(u) / one_minus;
  const cplx expo = -(xi + zeta) * u / one_minus + std::fabs(w.real());
  return std::pow(one_minus, -alpha - 1.0) * std::exp(expo) * specfun::bessel_i_reduced_scaled(alpha, w);
}

}  // namespace detail

/// Closed form (1-u)^{-1} exp(-(xi+zeta)u/(1-u)) (xi zeta u)^{-alpha/2}
/// I_alpha(2 sqrt(xi zeta u)/(1-u)), principal branches.
inline cplx hille_hardy_closed(double alpha, double xi, double zeta, cplx u) {
  ptcs::detail::require(alpha > -1.0, "hille_hardy: alpha must exceed -1");
  ptcs::detail::require(xi >= 0.0 && zeta >= 0.0, "hille_hardy: xi, zeta must be nonnegative");
  ptcs::detail::require(std::abs(u) < 1.0, "hille_hardy: |u| must be below 1");
  return detail::hille_hardy_reduced(alpha, xi, zeta, u);
}

// ---------------------------------------------------------------------------
// Overlap kernel and normalization

/// Q(z, w) = sum_n conj(c_n(z)) c_n(w), as the t-integral
///   e^{gamma eps/2} Gamma(gamma) int_0^{e^{-eps}} t^{gamma/2-1} HH(t e^{i(theta_z - theta_w)}) dt.
/// The substitution t = s^{2/gamma} removes the t^{gamma/2-1} endpoint factor.
inline QuadResult<cplx> overlap_kernel(const Params& p, const PhasePoint& z, const PhasePoint& w,
                                       quad::Tolerance tol = quad::Tolerance(1e-300, 1e-13)) {
  p.validate();
  const double g = p.gamma;
  const double alpha = g - 1.0;
  const cplx phase = std::polar(1.0, z.theta() - w.theta());
  const double xi = z.r2();
  const double zeta = w.r2();
  auto integrand = [&](double s) -> cplx {
    const double t = std::pow(s, 2.0 / g);
    return detail::hille_hardy_reduced(alpha, xi, zeta, t * phase);
  };
  const double upper = std::exp(-0.5 * g * p.epsilon);
  auto r = quad::integrate_finite(integrand, 0.0, upper, tol);
  const double pref = std::exp(0.5 * g * p.epsilon + specfun::log_gamma(g)) * (2.0 / g);
  r.value *= pref;
  r.abs_error *= pref;
  return r;
}

/// N(z) = Q(z, z) by quadrature. Requires r > 0 (the series serves r = 0).
inline QuadResult<double> normalization_integral(const Params& p, const PhasePoint& z,
                                                 quad::Tolerance tol = quad::Tolerance(1e-300, 1e-13)) {
  p.validate();
  ptcs::detail::require(z.r() > 0.0, "normalization_integral: r must be positive");
  const double g = p.gamma;
  const double alpha = g - 1.0;
  const double x = z.r2();
  auto integrand = [&](double s) -> double {
    const double t = std::pow(s, 2.0 / g);
    return detail::hille_hardy_reduced(alpha, x, x, t).real();
  };
  const double upper = std::exp(-0.5 * g * p.epsilon);
  auto r = quad::integrate_finite(integrand, 0.0, upper, tol);
  const double pref = std::exp(0.5 * g * p.epsilon + specfun::log_gamma(g)) * (2.0 / g);
  return {r.value * pref, r.abs_error * pref, r.evaluations};
}

/// N(z) by the cheapest exact route: quadrature for r > 0, series at r = 0.
inline double normalization(const Params& p, const PhasePoint& z) {
  if (z.r() == 0.0) return normalization_series(p, z).value;
  return normalization_integral(p, z).value;
}

/// eps -> 0+ limit Gamma(gamma) e^{r^2} (r^2)^{1-gamma} I_m(r^2/2) K_m(r^2/2), m = (gamma-1)/2.
inline double normalization_limit(double gamma, const PhasePoint& z) {
  ptcs::detail::require(gamma > 1.0, "normalization_limit: gamma must exceed 1");
  ptcs::detail::require(z.r() > 0.0, "normalization_limit: r must be positive");
  const double x = z.r2();
  const double m = 0.5 * (gamma - 1.0);
  // e^{x} I(x/2) K(x/2) = [e^{-x/2} I(x/2)] [e^{x/2} K(x/2)] e^{x}
  return std::exp(specfun::log_gamma(gamma) + x + (1.0 - gamma) * std::log(x)) *
         specfun::bessel_i_scaled(m, 0.5 * x) * specfun::bessel_k_scaled(m, 0.5 * x);
}

/// Limit of N_eps(z) estimated from quadrature values at eps_k = eps0 2^k,
/// k = 0..points-1, by polynomial extrapolation in sqrt(eps) (the approach
/// to the limit is O(sqrt eps)).
inline quad::Extrapolation normalization_limit_extrapolated(double gamma, const PhasePoint& z, double eps0 = 1e-3,
                                                            std::size_t points = 5) {
  ptcs::detail::require(eps0 > 0.0 && points >= 2, "normalization_limit_extrapolated: bad schedule");
  std::vector<double> eps(points), vals(points);
  for (std::size_t k = 0; k < points; ++k) {
    eps[k] = eps0 * std::ldexp(1.0, static_cast<int>(k));
    vals[k] = normalization_integral({gamma, 0.0, eps[k]}, z).value;
  }
  return quad::extrapolate_to_zero(eps, vals, 0.5);
}

/// <z|w> from the kernel integral, normalized by (N(z) N(w))^{-1/2}.
inline cplx overlap(const Params& p, const PhasePoint& z, const PhasePoint& w) {
  const double nz = normalization(p, z);
  const double nw = normalization(p, w);
  return overlap_kernel(p, z, w).value / std::sqrt(nz * nw);
}

/// <z|w> from the coefficient series (the oracle for `overlap`).
inline SeriesResult<cplx> overlap_series(const Params& p, const PhasePoint& z, const PhasePoint& w,
                                         double rel_tol = 1e-16) {
  p.validate();
  const double alpha = p.gamma - 1.0;
  const double dtheta = z.theta() - w.theta();
  const double xz = z.r2();
  const double xw = w.r2();
  double pz = 1.0, cz = alpha + 1.0 - xz, pw = 1.0, cw = alpha + 1.0 - xw;
  auto term = [&](std::size_t n) -> cplx {
    double a, b;
    if (n == 0) {
      a = b = 1.0;
    } else if (n == 1) {
      a = cz;
      b = cw;
    } else {
      const double k = static_cast<double>(n - 1);
      const double nz = ((2.0 * k + 1.0 + alpha - xz) * cz - (k + alpha) * pz) / (k + 1.0);
      const double nw = ((2.0 * k + 1.0 + alpha - xw) * cw - (k + alpha) * pw) / (k + 1.0);
      pz = cz;
      cz = nz;
      pw = cw;
      cw = nw;
      a = nz;
      b = nw;
    }
    return std::polar(a * b * std::exp(-log_sigma(p, static_cast<unsigned>(n))), static_cast<double>(n) * dtheta);
  };
  auto s = detail::sum_windowed(term, std::exp(-p.epsilon), rel_tol);
  const double norm = std::sqrt(normalization_series(p, z).value * normalization_series(p, w).value);
  s.value /= norm;
  s.tail_estimate /= norm;
  return s;
}

// ---------------------------------------------------------------------------
// Measures

/// Density (1/Gamma(gamma)) N(z) |z|^{2 gamma} e^{-|z|^2} of the resolving
/// measure, relative to d mu(z) = r dr d theta / (2 pi). Relative to plain
/// dx dy divide by 2 pi.
inline double measure_density(const Params& p, const PhasePoint& z) {
  p.validate();
  if (z.r() == 0.0) return 0.0;
  const double x = z.r2();
  return normalization(p, z) * std::exp(p.gamma * std::log(x) - x - specfun::log_gamma(p.gamma));
}

/// Density (1/Gamma(2nu+2)) |z|^{4(nu+1)} e^{-|z|^2} of the transform's
/// target measure; depends on r only.
inline double target_measure_density(double nu, const PhasePoint& z) {
  ptcs::detail::require(nu > -1.0, "target_measure_density: nu must exceed -1");
  if (z.r() == 0.0) return 0.0;
  const double x = z.r2();
  const double g = 2.0 * (nu + 1.0);
  return std::exp(g * std::log(x) - x - specfun::log_gamma(g));
}

// ---------------------------------------------------------------------------
// Position-space wavefunctions (gamma = 2(nu+1))

namespace detail {

struct Geometry {
  cplx tau;  // e^{-(i theta + eps/2)}
  cplx d;    // 1 - 2 tau cos x + tau^2
  cplx e;    // -r^2 tau (cos x - tau) / d
  cplx y;    // i r^2 tau sin x / d
  double s;  // sin x
};

inline Geometry geometry(const PhasePoint& z, double eps, double x) {
  Geometry g;
  g.tau = std::exp(cplx(-0.5 * eps, -z.theta()));
  const double c = std::cos(x);
  g.s = std::sin(x);
  g.d = 1.0 - 2.0 * g.tau * c + g.tau * g.tau;
  const double r2 = z.r2();
  g.e = -r2 * g.tau * (c - g.tau) / g.d;
  g.y = cplx(0.0, r2) * g.tau * g.s / g.d;
  return g;
}

// d^{-lambda} with d = (1 - tau e^{ix})(1 - tau e^{-ix}); each factor has a
// positive real part, so the product of principal powers is the branch that
// is continuous from tau = 0.
inline cplx d_power(const PhasePoint& z, double eps, double x, double lambda) {
  const cplx tau = std::exp(cplx(-0.5 * eps, -z.theta()));
  const cplx a = 1.0 - tau * std::polar(1.0, x);
  const cplx b = 1.0 - tau * std::polar(1.0, -x);
  return std::pow(a, -lambda) * std::pow(b, -lambda);
}

// Unnormalized series sum S(x) = sum_n c_n phi_n(x), in the branch-free form
//   2^{-mu} sqrt(Gamma(2nu+2)) (sin x)^{nu+1} d^{-(nu+1)} e^{E} (y/2)^{-mu} I_mu(y),  mu = nu + 1/2.
inline cplx closed_form_unnormalized(double nu, const PhasePoint& z, double eps, double x) {
  if (x <= 0.0 || x >= std::numbers::pi) return 0.0;
  const auto g = geometry(z, eps, x);
  const double mu = nu + 0.5;
  const double lg = 0.5 * specfun::log_gamma(2.0 * nu + 2.0) - mu * std::numbers::ln2 + (nu + 1.0) * std::log(g.s);
  const cplx red = specfun::bessel_i_reduced_scaled(mu, g.y);
  return d_power(z, eps, x, nu + 1.0) * std::exp(g.e + std::fabs(g.y.real()) + lg) * red;
}

// The displayed form sqrt(Gamma(2nu+2)) (i r^2 tau)^{-mu} (sin x)^{1/2}
// d^{-1/2} e^{E} I_mu(y), every power on the principal branch.
inline cplx closed_form_literal(double nu, const PhasePoint& z, double eps, double x) {
  if (x <= 0.0 || x >= std::numbers::pi) return 0.0;
  const auto g = geometry(z, eps, x);
  const double mu = nu + 0.5;
  const cplx a = cplx(0.0, z.r2()) * g.tau;
  const cplx ib = specfun::bessel_i_complex_scaled(mu, g.y);
  return std::exp(0.5 * specfun::log_gamma(2.0 * nu + 2.0)) * std::pow(a, -mu) * std::sqrt(g.s) *
         std::pow(g.d, -0.5) * std::exp(g.e + std::fabs(g.y.real())) * ib;
}

// Square-well sum sqrt(2/pi) (r^2 tau)^{-1} e^{E} sin(r^2 tau sin x / d), with
// e^{E} sin(q) formed from two exponentials so neither factor overflows.
inline cplx square_well_unnormalized(const PhasePoint& z, double eps, double x) {
  if (x <= 0.0 || x >= std::numbers::pi) return 0.0;
  const auto g = geometry(z, eps, x);
  const double a = std::sqrt(2.0 / std::numbers::pi);
  const cplx ratio = g.s / g.d;  // q / (r^2 tau)
  const cplx q = z.r2() * g.tau * ratio;
  if (std::abs(q) < 1e-4) {
    const cplx q2 = q * q;
    return a * std::exp(g.e) * ratio * (1.0 - q2 / 6.0 + q2 * q2 / 120.0);
  }
  const cplx iq(-q.imag(), q.real());
  return a * (std::exp(g.e + iq) - std::exp(g.e - iq)) / (cplx(0.0, 2.0) * z.r2() * g.tau);
}

}  // namespace detail

/// How the closed form picks branches. `Continuous` evaluates a rewrite
/// whose powers never cross a cut, so it equals the series for every z.
/// `Principal` evaluates the displayed formula with principal branches and
/// raises BranchError where that disagrees with the continuous value (it
/// does for some theta near 2 pi when nu is not a half-integer).
enum class BranchPolicy { Continuous, Principal };

/// Relative mismatch tolerated under BranchPolicy::Principal.
inline constexpr double kBranchTolerance = 1e-6;

inline cplx square_well_wavefunction(const PhasePoint& z, double eps, double x,
                                     std::optional<double> norm = std::nullopt) {
  ptcs::detail::require(eps > 0.0, "square_well_wavefunction: eps must be positive");
  ptcs::detail::require(x >= 0.0 && x <= std::numbers::pi, "square_well_wavefunction: x must lie in [0, pi]");
  const double n = norm ? *norm : normalization({2.0, 0.0, eps}, z);
  return detail::square_well_unnormalized(z, eps, x) / std::sqrt(n);
}

/// Normalized wavefunction <x|z; nu; eps> of the gamma = 2(nu+1) family.
/// nu = 0 dispatches to the square well. Pass `norm` to reuse a known N(z).
inline cplx closed_form_wavefunction(double nu, const PhasePoint& z, double eps, double x,
                                     std::optional<double> norm = std::nullopt,
                                     BranchPolicy policy = BranchPolicy::Continuous) {
  ptcs::detail::require(eps > 0.0, "closed_form_wavefunction: eps must be positive");
  ptcs::detail::require(nu >= 0.0, "closed_form_wavefunction: nu must be nonnegative");
  ptcs::detail::require(x >= 0.0 && x <= std::numbers::pi, "closed_form_wavefunction: x must lie in [0, pi]");
  if (nu == 0.0) return square_well_wavefunction(z, eps, x, norm);
  const double n = norm ? *norm : normalization(Params::matched(nu, eps), z);
  const cplx safe = detail::closed_form_unnormalized(nu, z, eps, x);
  if (policy == BranchPolicy::Principal && z.r() > 0.0) {
    const cplx shown = detail::closed_form_literal(nu, z, eps, x);
    const double mismatch = std::abs(shown - safe);
    if (mismatch > kBranchTolerance * std::max(std::abs(safe), 1e-3)) {
      throw BranchError("closed_form_wavefunction: principal-branch form leaves the series branch", mismatch);
    }
    return shown / std::sqrt(n);
  }
  return safe / std::sqrt(n);
}

/// sum_{n<count} c_n(z) phi_n^nu(x) / sqrt(N): the series the closed form sums.
/// `count` defaults to a truncation with |c_N|^2 < 1e-30 of the partial norm.
inline SeriesResult<cplx> series_wavefunction(double nu, const PhasePoint& z, double eps, double x,
                                              std::optional<double> norm = std::nullopt, std::size_t count = 0) {
  const Params p = Params::matched(nu, eps);
  p.validate();
  if (count == 0) count = truncation_order(p, z, 1e-30, 6000).terms;
  const auto coeffs = cs_coefficients(p, z, count);
  const spt::EigenBasis basis({nu}, count);
  std::vector<double> phi(count);
  basis.evaluate(x, phi);
  cplx sum = 0.0;
  for (std::size_t k = 0; k < count; ++k) sum += coeffs[k].value * phi[k];
  const double n = norm ? *norm : normalization(p, z);
  const double tail = count > 0 ? std::abs(coeffs.back().value) * std::fabs(phi.back()) : 0.0;
  return {sum / std::sqrt(n), count, tail / std::sqrt(n)};
}

/// A fixed state |z; nu; eps> with gamma = 2(nu+1); N(z) is computed once.
class CoherentState {
public:
  CoherentState(double nu, const PhasePoint& z, double eps)
      : nu_(nu), z_(z), eps_(eps), norm_(normalization(Params::matched(nu, eps), z)) {
    ptcs::detail::require(nu >= 0.0, "CoherentState: nu must be nonnegative");
  }

  [[nodiscard]] double norm() const { return norm_; }
  [[nodiscard]] double nu() const { return nu_; }
  [[nodiscard]] const PhasePoint& point() const { return z_; }
  [[nodiscard]] double epsilon() const { return eps_; }

  [[nodiscard]] cplx operator()(double x) const { return closed_form_wavefunction(nu_, z_, eps_, x, norm_); }
  [[nodiscard]] cplx series(double x) const { return series_wavefunction(nu_, z_, eps_, x, norm_).value; }

  [[nodiscard]] WavefunctionGrid grid(std::span<const double> xs) const {
    WavefunctionGrid g;
    g.xs.assign(xs.begin(), xs.end());
    g.values.reserve(xs.size());
    for (double x : xs) g.values.push_back((*this)(x));
    g.params = {{"nu", nu_}, {"r", z_.r()}, {"theta", z_.theta()}, {"eps", eps_}, {"norm", norm_}};
    return g;
  }

private:
  double nu_;
  PhasePoint z_;
  double eps_;
  double norm_;
};

// ---------------------------------------------------------------------------
// Coherent-state transform

struct TransformSequence {
  std::vector<double> eps;
  std::vector<cplx> values;  // sqrt(N_eps) <phi | z; nu; eps> per schedule entry
  cplx limit;                // polynomial extrapolation of `values` to eps = 0
  double limit_error;
};

/// sqrt(N) <phi|z; nu; eps> = int_0^pi conj(phi(x)) S_eps(x) dx for each eps
/// of a strictly decreasing schedule, plus an extrapolated eps -> 0 value
/// (the sequence is smooth in eps: for phi = phi_n it is e^{-n eps/2} times
/// the limit).
inline TransformSequence cs_transform(double nu, const std::function<cplx(double)>& phi, const PhasePoint& z,
                                      std::span<const double> eps_schedule, double tol = 1e-12) {
  ptcs::detail::require(nu > 0.0, "cs_transform: nu must be positive");
  ptcs::detail::require(!eps_schedule.empty(), "cs_transform: empty schedule");
  for (std::size_t i = 0; i < eps_schedule.size(); ++i) {
    ptcs::detail::require(eps_schedule[i] > 0.0, "cs_transform: eps must be positive");
    if (i > 0) ptcs::detail::require(eps_schedule[i] < eps_schedule[i - 1], "cs_transform: schedule must decrease");
  }
  TransformSequence out;
  out.eps.assign(eps_schedule.begin(), eps_schedule.end());
  for (double eps : eps_schedule) {
    auto integrand = [&](double x) { return std::conj(phi(x)) * detail::closed_form_unnormalized(nu, z, eps, x); };
    out.values.push_back(quad::integrate_finite(integrand, 0.0, std::numbers::pi, quad::Tolerance(tol, tol)).value);
  }
  std::vector<double> re(out.values.size()), im(out.values.size());
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    re[i] = out.values[i].real();
    im[i] = out.values[i].imag();
  }
  const auto er = quad::extrapolate_to_zero(out.eps, re, 1.0);
  const auto ei = quad::extrapolate_to_zero(out.eps, im, 1.0);
  out.limit = {er.value, ei.value};
  out.limit_error = std::hypot(er.error, ei.error);
  return out;
}

/// The eps -> 0 image of phi_n: e^{-in theta} L_n^{(2nu+1)}(r^2) / sqrt(sigma_{2(nu+1),0}(n)).
inline cplx transform_of_eigenstate(double nu, unsigned n, const PhasePoint& z) {
  return coefficient(Params{2.0 * (nu + 1.0), nu, 0.0}, z, n);
}

}  // namespace ptcs::epscs

#endif  // PTCS_EPSCS_HPP
