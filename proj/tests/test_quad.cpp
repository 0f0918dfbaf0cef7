#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "ptcs/bessel.hpp"
#include "ptcs/quad.hpp"
#include "ptcs/specfun.hpp"

namespace q = ptcs::quad;
namespace sf = ptcs::specfun;
using std::numbers::pi;
using cplx = std::complex<double>;

namespace {

struct Known {
  const char* name;
  std::function<double(double)> f;
  double a;
  double b;
  double value;
};

std::vector<Known> validation_set() {
  return {
      {"sin", [](double x) { return std::sin(x); }, 0.0, pi, 2.0},
      {"inv_sqrt", [](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, 2.0},
      {"log", [](double t) { return std::log(t); }, 0.0, 1.0, -1.0},
      {"cubic", [](double x) { return x * x * x; }, 0.0, 1.0, 0.25},
      {"exp", [](double x) { return std::exp(x); }, 0.0, 1.0, std::numbers::e - 1.0},
      {"lorentz", [](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0, pi / 4.0},
      {"power_07", [](double t) { return std::pow(t, -0.7); }, 0.0, 1.0, 1.0 / 0.3},
      {"cos_sq", [](double x) { return std::cos(5 * x) * std::cos(5 * x); }, 0.0, 2 * pi, pi},
      {"sqrt", [](double x) { return std::sqrt(x); }, 0.0, 1.0, 2.0 / 3.0},
      {"sqrt_lorentz", [](double x) { return 1.0 / (std::sqrt(x) * (1.0 + x)); }, 0.0, 1.0, pi / 2.0},
      {"near_pole", [](double x) { return 1.0 / (x + 0.01); }, 0.0, 1.0, std::log(101.0)},
      {"decay", [](double x) { return std::exp(-x); }, 0.0, 10.0, 1.0 - std::exp(-10.0)},
      {"xlogx", [](double x) { return x * std::log(x); }, 0.0, 1.0, -0.25},
      {"xsinx", [](double x) { return x * std::sin(x); }, 0.0, pi, pi},
      {"cos20", [](double x) { return std::cos(20 * x); }, 0.0, 1.0, std::sin(20.0) / 20.0},
      {"gauss", [](double x) { return std::exp(-x * x); }, 0.0, 1.0, std::sqrt(pi) / 2.0 * std::erf(1.0)},
      {"kink", [](double x) { return std::fabs(x - 1.0 / 3.0); }, 0.0, 1.0, 5.0 / 18.0},
      {"log1m_over_x", [](double x) { return std::log1p(-x) / x; }, 0.0, 1.0, -pi * pi / 6.0},
      {"runge", [](double x) { return 1.0 / (1.0 + 25 * x * x); }, 0.0, 1.0, std::atan(5.0) / 5.0},
      {"x_over_expm1", [](double x) { return x / std::expm1(x); }, 0.0, 50.0, pi * pi / 6.0 - 1.0e-19},
  };
}

}  // namespace

TEST(IntegrateFinite, Examples) {
  auto s = q::integrate_finite([](double x) { return std::sin(x); }, 0.0, pi, 1e-13);
  EXPECT_NEAR(s.value, 2.0, 1e-13);
  EXPECT_GE(s.evaluations, 1u);
  auto r = q::integrate_finite([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, 1e-12);
  EXPECT_NEAR(r.value, 2.0, 1e-11);
}

TEST(IntegrateFinite, ComplexIntegrandComponentwise) {
  auto r = q::integrate_finite([](double x) { return std::exp(cplx(0.0, x)); }, 0.0, pi, 1e-13);
  EXPECT_NEAR(r.value.real(), 0.0, 1e-13);
  EXPECT_NEAR(r.value.imag(), 2.0, 1e-13);
}

TEST(IntegrateFinite, ErrorEstimateIsReliableOnValidationSet) {
  int covered = 0;
  const auto cases = validation_set();
  for (const auto& c : cases) {
    SCOPED_TRACE(c.name);
    const auto r = q::integrate_finite(c.f, c.a, c.b, 1e-10);
    const double actual = std::fabs(r.value - c.value);
    EXPECT_LE(actual, 1e-9) << c.name;
    EXPECT_GE(r.abs_error, 0.0);
    if (actual <= r.abs_error + 4e-16 * std::fabs(c.value)) ++covered;
  }
  EXPECT_GE(covered, 19) << "error bound must hold in at least 95% of cases";
}

TEST(IntegrateFinite, LargerBudgetNeverHurts) {
  for (const auto& c : validation_set()) {
    double last = INFINITY;
    for (std::size_t budget : {4u, 8u, 16u, 32u, 64u}) {
      double estimate;
      try {
        estimate = q::integrate_finite(c.f, c.a, c.b, q::Tolerance(1e-300), budget).value;
      } catch (const ptcs::ConvergenceError& e) {
        estimate = e.best_estimate.real();
      }
      const double err = std::fabs(estimate - c.value);
      EXPECT_LE(err, last * (1.0 + 1e-12) + 1e-15) << c.name << " budget " << budget;
      last = err;
    }
  }
}

TEST(IntegrateFinite, InteriorEndpointSingularityReportsPrecisionFloor) {
  const auto r = q::integrate_finite([](double x) { return 1.0 / std::sqrt(1.0 - x * x); }, -1.0, 1.0, 1e-12);
  EXPECT_NEAR(r.value, pi, 1e-6);
  EXPECT_GE(r.abs_error, std::fabs(r.value - pi));
}

TEST(IntegrateFinite, BudgetExhaustionCarriesEstimate) {
  try {
    q::integrate_finite([](double t) { return std::pow(t, -0.999); }, 0.0, 1.0, 1e-14, 20);
    FAIL() << "expected ConvergenceError";
  } catch (const ptcs::ConvergenceError& e) {
    EXPECT_GT(e.best_estimate.real(), 0.0);
    EXPECT_GT(e.error_estimate, 0.0);
  }
  EXPECT_THROW(q::integrate_finite([](double x) { return x; }, 1.0, 0.0, 1e-10), ptcs::DomainError);
}

TEST(IntegrateSemiInfinite, Exponential) {
  const auto r = q::integrate_semi_infinite([](double x) { return std::exp(-x); }, 1e-12);
  EXPECT_NEAR(r.value, 1.0, 1e-12);
}

TEST(IntegrateSemiInfinite, LaguerreWeightedNorm) {
  for (double g : {1.0, 2.5, 4.0}) {
    for (unsigned n : {0u, 3u, 7u}) {
      const auto r = q::integrate_semi_infinite(
          [&](double x) {
            const double l = sf::laguerre(n, g - 1.0, x);
            return std::pow(x, g) * std::exp(-x) * l * l;
          },
          q::Tolerance(1e-13, 1e-12));
      const double expect = sf::gamma(g) * sf::pochhammer(g, n) * (2.0 * n + g) / std::tgamma(n + 1.0);
      EXPECT_LE(std::fabs(r.value - expect) / expect, 1e-10) << g << " " << n;
    }
  }
}

TEST(IntegrateSemiInfinite, AlgebraicDecay) {
  const auto r = q::integrate_semi_infinite([](double x) { return 1.0 / ((1.0 + x) * (1.0 + x) * (1.0 + x)); }, 1e-10);
  EXPECT_NEAR(r.value, 0.5, 1e-9);
}

TEST(IntegrateOscillatory, WatsonFormula) {
  const double beta = 1.5, eta = 2.0, u = 1.0, a = 1.5;
  const auto lhs = q::integrate_oscillatory(
      [&](double y) { return sf::bessel_j(beta, y * u) * std::pow(y, beta + 1) / std::pow(y * y + a * a, eta + 1); },
      10.0, pi / u, 1e-12);
  const double rhs = std::pow(u, eta) * std::pow(a, beta - eta) * sf::bessel_k(beta - eta, u * a) /
                     (std::pow(2.0, eta) * sf::gamma(eta + 1));
  EXPECT_NEAR(lhs.value, rhs, 1e-10);
}

TEST(IntegrateOscillatory, SlowAlternatingTails) {
  const auto sinc = q::integrate_oscillatory([](double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }, pi, pi, 1e-11);
  EXPECT_NEAR(sinc.value, pi / 2.0, 1e-10);
  const auto j0 = q::integrate_oscillatory([](double x) { return sf::bessel_j(0.0, x); }, 2.4048255576957729, pi, 1e-11);
  EXPECT_NEAR(j0.value, 1.0, 1e-10);
}

TEST(GaussLegendre, PolynomialExactness) {
  const double v = q::integrate_gauss_legendre<20>([](double x) { return std::pow(x, 39); }, 0.0, 1.0, 1);
  EXPECT_NEAR(v, 1.0 / 40.0, 1e-15);
  const double w = q::integrate_gauss_legendre<7>([](double x) { return std::sin(x); }, 0.0, pi, 8);
  EXPECT_NEAR(w, 2.0, 1e-14);
}

TEST(SumSeries, Geometric) {
  const auto half = q::sum_series([](std::size_t n) { return std::ldexp(1.0, -static_cast<int>(n)); }, 1e-15);
  EXPECT_NEAR(half.value, 2.0, 1e-14);
  const auto damped = q::sum_series([](std::size_t n) { return std::exp(-0.1 * n); }, 1e-14);
  EXPECT_NEAR(damped.value, 1.0 / (1.0 - std::exp(-0.1)), 1e-12);
  EXPECT_GE(damped.tail_estimate, 0.0);
  EXPECT_GE(damped.terms_used, 1u);
}

TEST(SumSeries, HilleHardyPartialSums) {
  const double alpha = 1.5, xi = 1.0, zeta = 2.0, u = 0.5;
  const auto lhs = q::sum_series(
      [&](std::size_t n) {
        const double w = std::exp(std::lgamma(n + 1.0) - std::lgamma(n + alpha + 1.0)) * std::pow(u, n);
        return w * sf::laguerre(n, alpha, xi) * sf::laguerre(n, alpha, zeta);
      },
      1e-15);
  const double arg = 2.0 * std::sqrt(xi * zeta * u) / (1.0 - u);
  const double rhs = std::exp(-(xi + zeta) * u / (1.0 - u)) / (1.0 - u) * std::pow(xi * zeta * u, -alpha / 2.0) *
                     sf::bessel_i(alpha, arg);
  EXPECT_NEAR(lhs.value, rhs, 1e-13 * std::fabs(rhs));
}

TEST(SumSeries, Failures) {
  EXPECT_THROW(q::sum_series([](std::size_t n) { return std::pow(1.1, n); }, 1e-10), ptcs::ConvergenceError);
  EXPECT_THROW(q::sum_series([](std::size_t n) { return 1.0 / (n + 1.0); }, 1e-12, 1000), ptcs::ConvergenceError);
}

TEST(Extrapolation, ExactForPolynomials) {
  const std::vector<double> h{0.4, 0.2, 0.1};
  std::vector<double> v;
  for (double x : h) v.push_back(1.0 + 2.0 * x + 3.0 * x * x);
  EXPECT_NEAR(q::extrapolate_to_zero(h, v, 1.0).value, 1.0, 1e-13);
  std::vector<double> w;
  for (double x : h) w.push_back(5.0 - std::sqrt(x) + 0.5 * x);
  const auto e = q::extrapolate_to_zero(h, w, 0.5);
  EXPECT_NEAR(e.value, 5.0, 1e-13);
}
