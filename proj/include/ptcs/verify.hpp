#ifndef PTCS_VERIFY_HPP
#define PTCS_VERIFY_HPP

// Named verification suites. Each suite evaluates one family of identities
// against an independent route and returns a table with columns
// name,measured,expected,tol,pass where pass means |measured - expected| <= tol.
// Summation and sampling orders are fixed, so a suite's table is a pure
// function of its options.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ptcs/epscs.hpp"
#include "ptcs/error.hpp"
#include "ptcs/grid.hpp"
#include "ptcs/identity.hpp"
#include "ptcs/laghankel.hpp"
#include "ptcs/quad.hpp"
#include "ptcs/report.hpp"
#include "ptcs/spt.hpp"

namespace ptcs::verify {

using cplx = std::complex<double>;
using std::numbers::pi;

struct Options {
  /// Replaces the base tolerance of every tolerance-scaled row. Counting rows
  /// (monotonicity, tolerance 0) are not affected.
  std::optional<double> tol;
};

namespace detail {

inline std::string label(const char* fmt, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, a);
  return buf;
}

inline std::string label(const char* fmt, double a, double b) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

class Builder {
public:
  Builder(std::string title, const Options& opt) : opt_(opt) {
    table_.title = std::move(title);
    table_.columns = {"name", "measured", "expected", "tol", "pass"};
    if (opt.tol) table_.meta.emplace_back("tol", *opt.tol);
  }

  /// Row whose tolerance is `scale` times the suite base tolerance `base`
  /// (or times the override).
  void scaled(const std::string& name, double measured, double expected, double base, double scale = 1.0) {
    row(name, measured, expected, opt_.tol.value_or(base) * scale);
  }

  /// Row with a fixed tolerance, e.g. a count of violations.
  void row(const std::string& name, double measured, double expected, double tol) {
    const bool pass = std::isfinite(measured) && std::fabs(measured - expected) <= tol;
    table_.add({name, measured, expected, tol, pass});
  }

  report::Table take() { return std::move(table_); }

private:
  const Options& opt_;
  report::Table table_;
};

/// Uniform draw in [lo, hi) from the raw 64-bit stream, which is fully
/// specified (unlike std::uniform_real_distribution).
inline double draw(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1p-53;
}

inline double inner(const spt::SPTConfig& cfg, unsigned n, unsigned m) {
  return quad::integrate_finite([&](double x) { return spt::eigenstate(cfg, n, x) * spt::eigenstate(cfg, m, x); }, 0.0,
                                cfg.L, 1e-13)
      .value;
}

}  // namespace detail

/// Orthonormality for n, m <= 15 and the eigen-equation residual (five-point
/// second difference on 4001 points, sup over [0.1, pi - 0.1]) for n <= 8.
inline report::Table eigenbasis_suite(const Options& opt = {}) {
  detail::Builder b("eigenbasis", opt);
  for (double nu : {0.0, 0.5, 1.0, 2.5}) {
    const spt::SPTConfig cfg{nu};
    double worst = 0.0;
    for (unsigned n = 0; n <= 15; ++n) {
      for (unsigned m = n; m <= 15; ++m) worst = std::max(worst, std::fabs(detail::inner(cfg, n, m) - (n == m ? 1.0 : 0.0)));
    }
    b.scaled(detail::label("orthonormality nu=%g", nu), worst, 0.0, 1e-9);
  }
  for (double nu : {0.0, 0.5, 1.0, 2.5}) {
    const spt::SPTConfig cfg{nu};
    constexpr std::size_t count = 4001;
    const double h = pi / (count - 1);
    double worst = 0.0;
    std::vector<double> phi(count);
    for (unsigned n = 0; n <= 8; ++n) {
      for (std::size_t i = 0; i < count; ++i) phi[i] = spt::eigenstate(cfg, n, h * static_cast<double>(i));
      for (std::size_t i = 2; i + 2 < count; ++i) {
        const double x = h * static_cast<double>(i);
        if (x < 0.1 || x > pi - 0.1) continue;
        const double d2 = (-phi[i - 2] + 16 * phi[i - 1] - 30 * phi[i] + 16 * phi[i + 1] - phi[i + 2]) / (12 * h * h);
        worst = std::max(worst, std::fabs(-d2 + (spt::spt_potential(cfg, x) - spt::eigenvalue(cfg, n)) * phi[i]));
      }
    }
    b.scaled(detail::label("eigen-equation residual nu=%g", nu), worst, 0.0, 1e-4);
  }
  return b.take();
}

/// Truncated bilinear Laguerre sum against its closed form over a 3x3x3x3
/// matrix of (alpha, xi, zeta, u), |u| <= 0.9; relative error, worst per alpha.
inline report::Table hille_hardy_suite(const Options& opt = {}) {
  detail::Builder b("hille-hardy", opt);
  const cplx us[] = {cplx(0.5, 0.0), std::polar(0.7, 2.0), std::polar(0.9, -2.9)};
  for (double alpha : {0.0, 1.0, 2.5}) {
    double worst = 0.0;
    for (double xi : {0.2, 1.3, 3.0}) {
      for (double zeta : {0.5, 1.0, 2.5}) {
        for (cplx u : us) {
          const cplx s = epscs::hille_hardy_series(alpha, xi, zeta, u).value;
          const cplx c = epscs::hille_hardy_closed(alpha, xi, zeta, u);
          worst = std::max(worst, std::abs(s - c) / std::abs(c));
        }
      }
    }
    b.scaled(detail::label("bilinear sum alpha=%g", alpha), worst, 0.0, 1e-9);
  }
  return b.take();
}

/// Normalization integral against the coefficient series (relative, worst
/// over r and eps per gamma), then the eps -> 0 limit against a sqrt(eps)
/// extrapolation of the integral from eps = 1e-3.
inline report::Table normalization_suite(const Options& opt = {}) {
  detail::Builder b("normalization", opt);
  for (double gamma : {1.0, 2.0, 3.0, 5.0}) {
    double worst = 0.0;
    for (double r : {0.5, 1.0, 2.0, 4.0}) {
      for (double eps : {0.5, 0.1}) {
        const epscs::Params p{gamma, 0.0, eps};
        const epscs::PhasePoint z(r, 0.3);
        const double q = epscs::normalization_integral(p, z).value;
        const double s = epscs::normalization_series(p, z).value;
        worst = std::max(worst, std::fabs(q - s) / s);
      }
    }
    b.scaled(detail::label("integral vs series gamma=%g", gamma), worst, 0.0, 1e-8);
  }
  for (double gamma : {2.0, 3.0, 4.0}) {
    for (double r : {0.5, 1.0, 2.0}) {
      const epscs::PhasePoint z(r, 0.0);
      const double limit = epscs::normalization_limit(gamma, z);
      const double extrapolated = epscs::normalization_limit_extrapolated(gamma, z, 1e-3).value;
      b.scaled(detail::label("extrapolated limit gamma=%g r=%g", gamma, r), extrapolated / limit, 1.0, 1e-4);
    }
  }
  return b.take();
}

/// Closed-form wavefunction against the truncated series on a 41-point grid
/// over the test matrix (worst per (nu, r)), the square-well form, and the
/// position-space norm.
inline report::Table closed_form_suite(const Options& opt = {}) {
  detail::Builder b("closed-form", opt);
  for (double nu : {0.5, 1.0, 2.0}) {
    for (double r : {0.5, 1.5, 3.0}) {
      double worst = 0.0;
      for (double th : {0.0, 0.9, 2.5}) {
        for (double eps : {0.5, 0.2, 0.05}) {
          const epscs::PhasePoint z(r, th);
          const double norm = epscs::normalization(epscs::Params::matched(nu, eps), z);
          for (int i = 0; i <= 40; ++i) {
            const double x = pi * i / 40.0;
            const cplx a = epscs::closed_form_wavefunction(nu, z, eps, x, norm, epscs::BranchPolicy::Principal);
            const cplx s = epscs::series_wavefunction(nu, z, eps, x, norm).value;
            worst = std::max(worst, std::abs(a - s));
          }
        }
      }
      b.scaled(detail::label("closed form vs series nu=%g r=%g", nu, r), worst, 0.0, 1e-7);
    }
  }
  for (double r : {0.0, 0.5, 1.5, 3.0}) {
    double worst = 0.0;
    for (double eps : {0.5, 0.2, 0.05}) {
      const epscs::PhasePoint z(r, 0.9);
      const double norm = epscs::normalization(epscs::Params::matched(0.0, eps), z);
      for (int i = 0; i <= 40; ++i) {
        const double x = pi * i / 40.0;
        const cplx a = epscs::square_well_wavefunction(z, eps, x, norm);
        const cplx s = epscs::series_wavefunction(0.0, z, eps, x, norm).value;
        worst = std::max(worst, std::abs(a - s));
      }
    }
    b.scaled(detail::label("square well vs series r=%g", r), worst, 0.0, 1e-7);
  }
  for (double nu : {0.0, 0.5, 2.0}) {
    for (double r : {0.0, 1.5, 3.0}) {
      const epscs::CoherentState s(nu, epscs::PhasePoint(r, 1.0), 0.1);
      const double n2 = quad::integrate_finite([&](double x) { return std::norm(s(x)); }, 0.0, pi, 1e-11).value;
      b.scaled(detail::label("unit norm nu=%g r=%g", nu, r), n2, 1.0, 1e-7, 10.0);
    }
  }
  return b.take();
}

/// Smoothing operator: eigen-action, agreement of the spectral and kernel
/// routes, the exact L2 error of a finite combination, and monotone
/// convergence for a smooth bump.
inline report::Table identity_suite(const Options& opt = {}) {
  detail::Builder b("identity", opt);
  auto eigen = [](double nu, unsigned m) -> identity::Function {
    return [nu, m](double x) { return cplx(spt::eigenstate({nu}, m, x)); };
  };
  std::vector<double> xs;
  for (int i = 0; i < 41; ++i) xs.push_back(0.1 + (pi - 0.2) * i / 40.0);

  for (double nu : {0.5, 1.0}) {
    const double eps = 0.2;
    double worst = 0.0;
    for (unsigned m = 0; m <= 6; ++m) {
      const identity::SpectralSmoothing op(nu, eps, eigen(nu, m));
      const double damp = std::exp(-static_cast<double>(m) * eps);
      for (double x : xs) worst = std::max(worst, std::abs(op(x) - damp * spt::eigenstate({nu}, m, x)));
    }
    b.scaled(detail::label("eigen action nu=%g", nu), worst, 0.0, 1e-7);
  }

  const identity::Function parabola = [](double x) { return cplx(x * (pi - x)); };
  for (double nu : {0.5, 1.0}) {
    for (double eps : {0.3, 0.1}) {
      double worst = 0.0;
      for (const identity::Function& phi : {eigen(nu, 0), eigen(nu, 3), parabola}) {
        const identity::SpectralSmoothing spectral(nu, eps, phi);
        for (int i = 0; i < 9; ++i) {
          const double x = 0.1 + (pi - 0.2) * i / 8.0;
          worst = std::max(worst, std::abs(spectral(x) - identity::smoothing_by_kernel(nu, eps, phi, x)));
        }
      }
      b.scaled(detail::label("spectral vs kernel nu=%g eps=%g", nu, eps), worst, 0.0, 1e-7);
    }
  }

  {
    const double nu = 1.0;
    const double a[] = {0.5, -0.3, 0.8, 0.1, -0.6, 0.25};
    const identity::Function phi = [&](double x) {
      double s = 0.0;
      for (unsigned n = 0; n < 6; ++n) s += a[n] * spt::eigenstate({nu}, n, x);
      return cplx(s);
    };
    const std::vector<double> sched{0.3, 0.1};
    for (const auto& row : identity::convergence_study(nu, phi, sched, GridSpec{0.0, pi, 4001})) {
      double e2 = 0.0;
      for (unsigned n = 0; n < 6; ++n) e2 += a[n] * a[n] * std::pow(1.0 - std::exp(-static_cast<double>(n) * row.epsilon), 2);
      b.scaled(detail::label("finite combination L2 error eps=%g", row.epsilon), row.l2_error, std::sqrt(e2), 1e-6);
    }
  }

  {
    const identity::Function bump = [](double x) {
      const double t = x - pi / 2;
      return cplx(std::fabs(t) < 1.0 ? std::exp(-1.0 / (1.0 - t * t)) : 0.0);
    };
    const std::vector<double> sched{0.4, 0.2, 0.1, 0.05};
    const auto rows = identity::convergence_study(1.0, bump, sched, GridSpec{0.0, pi, 801});
    double l2_up = 0.0, sup_up = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      l2_up += rows[i].l2_error >= rows[i - 1].l2_error;
      sup_up += rows[i].sup_error >= rows[i - 1].sup_error;
    }
    b.row("bump L2 error increases along eps schedule", l2_up, 0.0, 0.0);
    b.row("bump sup error increases along eps schedule", sup_up, 0.0, 0.0);
  }
  return b.take();
}

/// Hankel-type representation of the Laguerre function against the direct
/// formula (error scaled by max(1, |value|), worst over n <= 12 per (nu, x)),
/// and Watson's integral on five seeded parameter draws.
inline report::Table hankel_suite(const Options& opt = {}) {
  detail::Builder b("hankel", opt);
  for (double nu : {0.5, 1.0, 2.0}) {
    for (double x : {0.5, 2.0, 8.0, 20.0}) {
      double worst = 0.0;
      for (unsigned n = 0; n <= 12; ++n) {
        const laghankel::LaguerreFunctionSpec s{n, nu, x};
        const double direct = laghankel::laguerre_function(s);
        const double q = laghankel::hankel_representation(s).value;
        worst = std::max(worst, std::fabs(q - direct) / std::max(1.0, std::fabs(direct)));
      }
      b.scaled(detail::label("hankel representation nu=%g x=%g", nu, x), worst, 0.0, 1e-7);
    }
  }
  std::mt19937_64 rng(20240611);
  for (int k = 0; k < 5; ++k) {
    const double eta = detail::draw(rng, 0.5, 2.5);
    const double beta = detail::draw(rng, -0.5, std::min(2.5, 2.0 * eta + 0.5));
    const double u = detail::draw(rng, 0.5, 2.0);
    const double a = detail::draw(rng, 0.5, 2.0);
    const auto w = laghankel::watson_integral(beta, eta, u, a);
    b.scaled("watson draw " + std::to_string(k), w.lhs.value, w.rhs, 1e-8);
  }
  return b.take();
}

/// Coherent-state transform of phi_n (nu = 1) along eps = 0.2, 0.1, 0.05, 0.02:
/// the relative gap to the eps -> 0 image at the last eps, whether the gap
/// shrinks along the schedule, and (supplementary) the extrapolated limit.
/// r = 2 is left out because L_1^{(3)}(4) = 0 makes the n = 1 gap undefined.
inline report::Table transform_suite(const Options& opt = {}) {
  detail::Builder b("transform", opt);
  const double nu = 1.0;
  const std::vector<double> sched{0.2, 0.1, 0.05, 0.02};
  for (unsigned n = 0; n <= 4; ++n) {
    const identity::Function phi = [nu, n](double x) { return cplx(spt::eigenstate({nu}, n, x)); };
    for (double r : {0.5, 1.0, 1.5}) {
      const epscs::PhasePoint z(r, 0.7);
      const cplx target = epscs::transform_of_eigenstate(nu, n, z);
      const auto seq = epscs::cs_transform(nu, phi, z, sched);
      std::vector<double> gaps;
      for (const cplx& v : seq.values) gaps.push_back(std::abs(v - target) / std::abs(target));
      double up = 0.0;
      for (std::size_t i = 1; i < gaps.size(); ++i) up += gaps[i] > gaps[i - 1] + 1e-10;
      const std::string tag = "n=" + std::to_string(n) + detail::label(" r=%g", r);
      b.scaled("final gap " + tag, gaps.back(), 0.0, 1e-3);
      b.row("gap increases " + tag, up, 0.0, 0.0);
      b.scaled("extrapolated limit " + tag, std::abs(seq.limit - target) / std::abs(target), 0.0, 1e-4);
    }
  }
  return b.take();
}

struct SuiteEntry {
  std::string_view name;
  report::Table (*run)(const Options&);
};

inline constexpr SuiteEntry kSuites[] = {
    {"eigenbasis", eigenbasis_suite}, {"hille-hardy", hille_hardy_suite}, {"normalization", normalization_suite},
    {"closed-form", closed_form_suite}, {"identity", identity_suite},     {"hankel", hankel_suite},
    {"transform", transform_suite},
};

/// Runs one suite by name, or every suite for "all" (rows prefixed by the
/// suite name).
inline report::Table run_suite(std::string_view name, const Options& opt = {}) {
  for (const auto& s : kSuites) {
    if (s.name == name) return s.run(opt);
  }
  ptcs::detail::require(name == "all", "verify: unknown suite");
  report::Table all;
  all.title = "all";
  all.columns = {"name", "measured", "expected", "tol", "pass"};
  if (opt.tol) all.meta.emplace_back("tol", *opt.tol);
  for (const auto& s : kSuites) {
    auto t = s.run(opt);
    for (auto& row : t.rows) {
      row[0] = std::string(s.name) + ": " + std::get<std::string>(row[0]);
      all.rows.push_back(std::move(row));
    }
  }
  return all;
}

inline bool all_pass(const report::Table& t) {
  return std::all_of(t.rows.begin(), t.rows.end(), [](const auto& row) { return std::get<bool>(row.back()); });
}

}  // namespace ptcs::verify

#endif  // PTCS_VERIFY_HPP
