#ifndef PTCS_SPT_HPP
#define PTCS_SPT_HPP

// Symmetric Poschl-Teller oscillator on [0, L]: potential, spectrum and the
// orthonormal eigenbasis. Units are hbar = 2m = 1, so the eigen-equation
//   -phi'' + V_nu phi = E_n phi
// holds exactly when E0 = (pi/L)^2, which is the default pair L = pi, E0 = 1.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "ptcs/error.hpp"
#include "ptcs/grid.hpp"
#include "ptcs/specfun.hpp"

namespace ptcs::spt {

struct SPTConfig {
  double nu = 0.0;
  double L = std::numbers::pi;
  double E0 = 1.0;

  void validate() const {
    detail::require(std::isfinite(nu) && nu > -1.0, "SPTConfig: nu must exceed -1");
    detail::require(std::isfinite(L) && L > 0.0, "SPTConfig: L must be positive");
    detail::require(std::isfinite(E0) && E0 > 0.0, "SPTConfig: E0 must be positive");
  }
};

/// General Poschl-Teller pair (eta, delta).
struct PTConfig {
  double eta = 1.0;
  double delta = 1.0;
  double L = std::numbers::pi;
  double E0 = 1.0;

  void validate() const {
    detail::require(eta > 0.0 && delta > 0.0, "PTConfig: eta and delta must be positive");
    detail::require(L > 0.0 && E0 > 0.0, "PTConfig: L and E0 must be positive");
  }
};

inline double pt_potential(const PTConfig& cfg, double x) {
  cfg.validate();
  detail::require(x > 0.0 && x < cfg.L, "pt_potential: x must lie strictly inside (0, L)");
  const double y = std::numbers::pi * x / (2.0 * cfg.L);
  const double c = std::cos(y);
  const double s = std::sin(y);
  return 0.25 * cfg.E0 * (cfg.eta * (cfg.eta - 1.0) / (c * c) + cfg.delta * (cfg.delta - 1.0) / (s * s));
}

inline double spt_potential(const SPTConfig& cfg, double x) {
  cfg.validate();
  detail::require(x > 0.0 && x < cfg.L, "spt_potential: x must lie strictly inside (0, L)");
  if (cfg.nu == 0.0) return 0.0;
  const double s = std::sin(std::numbers::pi * x / cfg.L);
  return cfg.E0 * cfg.nu * (cfg.nu + 1.0) / (s * s);
}

inline double eigenvalue(const SPTConfig& cfg, unsigned n) {
  cfg.validate();
  const double k = n + cfg.nu + 1.0;
  return cfg.E0 * k * k;
}

/// ln of the normalization constant
///   Gamma(nu+1) 2^{nu+1/2} L^{-1/2} sqrt(n!(n+nu+1)/Gamma(n+2nu+2)).
inline double log_eigen_norm(const SPTConfig& cfg, unsigned n) {
  const double nu = cfg.nu;
  return std::lgamma(nu + 1.0) + (nu + 0.5) * std::numbers::ln2 - 0.5 * std::log(cfg.L) +
         0.5 * (std::lgamma(n + 1.0) + std::log(n + nu + 1.0) - std::lgamma(n + 2.0 * nu + 2.0));
}

/// Orthonormal eigenstate phi_{n,L}^nu(x); zero at the walls. nu = 0 uses
/// the sine form sqrt(2/L) sin((n+1) pi x / L).
inline double eigenstate(const SPTConfig& cfg, unsigned n, double x) {
  cfg.validate();
  detail::require_finite(x, "eigenstate: x must be finite");
  detail::require(x >= 0.0 && x <= cfg.L, "eigenstate: x must lie in [0, L]");
  if (x == 0.0 || x == cfg.L) return 0.0;
  const double y = std::numbers::pi * x / cfg.L;
  if (cfg.nu == 0.0) return std::sqrt(2.0 / cfg.L) * std::sin((n + 1.0) * y);
  const double s = std::sin(y);
  const double c = std::cos(y);
  return std::exp(log_eigen_norm(cfg, n) + (cfg.nu + 1.0) * std::log(s)) * specfun::gegenbauer(n, cfg.nu + 1.0, c);
}

/// phi_0, ..., phi_{count-1} at one point. Normalization constants are
/// computed once per basis; values reuse one Gegenbauer recurrence pass.
class EigenBasis {
public:
  EigenBasis(const SPTConfig& cfg, std::size_t count) : cfg_(cfg), log_norm_(count) {
    cfg_.validate();
    for (std::size_t n = 0; n < count; ++n) log_norm_[n] = log_eigen_norm(cfg_, static_cast<unsigned>(n));
  }

  [[nodiscard]] std::size_t size() const { return log_norm_.size(); }
  [[nodiscard]] const SPTConfig& config() const { return cfg_; }

  void evaluate(double x, std::span<double> out) const {
    detail::require(out.size() >= size(), "EigenBasis: output too short");
    detail::require(x >= 0.0 && x <= cfg_.L, "EigenBasis: x must lie in [0, L]");
    const std::size_t count = size();
    if (x == 0.0 || x == cfg_.L) {
      for (std::size_t n = 0; n < count; ++n) out[n] = 0.0;
      return;
    }
    const double y = std::numbers::pi * x / cfg_.L;
    if (cfg_.nu == 0.0) {
      const double a = std::sqrt(2.0 / cfg_.L);
      for (std::size_t n = 0; n < count; ++n) out[n] = a * std::sin((n + 1.0) * y);
      return;
    }
    const double lambda = cfg_.nu + 1.0;
    const double u = std::cos(y);
    const double log_sin = lambda * std::log(std::sin(y));
    double prev = 1.0;
    double curr = 2.0 * lambda * u;
    for (std::size_t n = 0; n < count; ++n) {
      double c;
      if (n == 0) {
        c = 1.0;
      } else if (n == 1) {
        c = curr;
      } else {
        const double k = static_cast<double>(n - 1);
        const double next = (2.0 * (k + lambda) * u * curr - (k + 2.0 * lambda - 1.0) * prev) / (k + 1.0);
        prev = curr;
        curr = next;
        c = curr;
      }
      out[n] = std::exp(log_norm_[n] + log_sin) * c;
    }
  }

  [[nodiscard]] std::vector<double> evaluate(double x) const {
    std::vector<double> out(size());
    evaluate(x, out);
    return out;
  }

private:
  SPTConfig cfg_;
  std::vector<double> log_norm_;
};

inline WavefunctionGrid eigenstate_grid(const SPTConfig& cfg, unsigned n, std::span<const double> xs) {
  WavefunctionGrid g;
  g.xs.assign(xs.begin(), xs.end());
  g.values.reserve(xs.size());
  for (double x : xs) g.values.emplace_back(eigenstate(cfg, n, x), 0.0);
  g.params = {{"nu", cfg.nu}, {"L", cfg.L}, {"E0", cfg.E0}, {"n", static_cast<double>(n)}};
  return g;
}

inline WavefunctionGrid eigenstate_grid(const SPTConfig& cfg, unsigned n, const GridSpec& grid) {
  const auto xs = grid.points();
  return eigenstate_grid(cfg, n, std::span<const double>(xs));
}

}  // namespace ptcs::spt

#endif  // PTCS_SPT_HPP
