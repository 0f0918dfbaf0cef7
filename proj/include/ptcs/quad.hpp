#ifndef PTCS_QUAD_HPP
#define PTCS_QUAD_HPP

// Integration and summation engine. Every routine is deterministic: panel
// contributions are combined in a fixed left-to-right order regardless of
// the order in which the adaptive driver refined them.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ptcs/error.hpp"
#include "ptcs/results.hpp"

namespace ptcs::quad {

/// Absolute plus relative target: a result is accepted once its error
/// estimate is below max(abs, rel * |value|).
struct Tolerance {
  double abs = 1e-10;
  double rel = 0.0;

  Tolerance(double abs_tol, double rel_tol = 0.0) : abs(abs_tol), rel(rel_tol) {  // NOLINT
    ptcs::detail::require(abs_tol >= 0.0 && rel_tol >= 0.0 && (abs_tol > 0.0 || rel_tol > 0.0),
                          "tolerance must be positive");
  }
  [[nodiscard]] double target(double magnitude) const { return std::max(abs, rel * magnitude); }
  [[nodiscard]] Tolerance scaled(double factor) const { return {abs * factor, rel * factor}; }
};

namespace detail {

template <typename F>
using value_t = std::decay_t<std::invoke_result_t<F&, double>>;

template <typename V>
std::complex<double> to_complex(const V& v) {
  return std::complex<double>(v);
}

template <typename V>
struct Segment {
  double a;
  double b;
  V value;
  double error;
  bool splittable;
};

// One G7K15 panel with the QUADPACK error heuristic.
template <typename F, typename V = value_t<F>>
Segment<V> kronrod15(F& f, double a, double b) {
  using boost::math::quadrature::gauss;
  using boost::math::quadrature::gauss_kronrod;
  const auto& xk = gauss_kronrod<double, 15>::abscissa();
  const auto& wk = gauss_kronrod<double, 15>::weights();
  const auto& wg = gauss<double, 7>::weights();

  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<V, 15> fv;
  fv[0] = f(centre);
  for (std::size_t i = 1; i < 8; ++i) {
    fv[2 * i - 1] = f(centre - half * xk[i]);
    fv[2 * i] = f(centre + half * xk[i]);
  }
  V kron = wk[0] * fv[0];
  V gaus = wg[0] * fv[0];
  double resabs = wk[0] * std::abs(fv[0]);
  for (std::size_t i = 1; i < 8; ++i) {
    const V pair = fv[2 * i - 1] + fv[2 * i];
    kron += wk[i] * pair;
    resabs += wk[i] * (std::abs(fv[2 * i - 1]) + std::abs(fv[2 * i]));
    if (i % 2 == 0) gaus += wg[i / 2] * pair;
  }
  const V mean = kron * 0.5;
  double resasc = wk[0] * std::abs(fv[0] - mean);
  for (std::size_t i = 1; i < 8; ++i) {
    resasc += wk[i] * (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean));
  }
  const double scale = std::fabs(half);
  kron *= half;
  resabs *= scale;
  resasc *= scale;
  double err = std::abs((kron - gaus * half));
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double roundoff = 50.0 * eps * resabs;
  bool splittable = true;
  if (err <= roundoff) {
    err = std::max(err, roundoff);
    splittable = false;
  }
  // No further split once the midpoint would collide with an endpoint.
  if (b - a <= 512.0 * eps * std::max(std::fabs(a), std::fabs(b)) || b - a < 1e-280) splittable = false;
  return {a, b, kron, err, splittable};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// Nodes are strictly interior, so integrable endpoint singularities need
/// no special handling. A singularity at an endpoint far from 0 is resolved
/// only down to the node spacing floating point allows; the returned
/// abs_error then exceeds the tolerance rather than the loop spinning. Throws ConvergenceError once `max_intervals`
/// panels are in use without meeting the tolerance.
template <typename F>
auto integrate_finite(F&& f, double a, double b, Tolerance tol, std::size_t max_intervals = 4000)
    -> QuadResult<detail::value_t<F>> {
  using V = detail::value_t<F>;
  ptcs::detail::require(std::isfinite(a) && std::isfinite(b) && a < b, "integrate_finite: need finite a < b");
  std::vector<detail::Segment<V>> heap;
  std::vector<detail::Segment<V>> frozen;
  auto by_error = [](const auto& l, const auto& r) {
    return l.error < r.error || (l.error == r.error && l.a > r.a);
  };
  auto push = [&](detail::Segment<V> s) {
    if (s.splittable) {
      heap.push_back(std::move(s));
      std::push_heap(heap.begin(), heap.end(), by_error);
    } else {
      frozen.push_back(std::move(s));
    }
  };
  push(detail::kronrod15(f, a, b));
  std::size_t evaluations = 15;

  auto totals = [&]() {
    std::vector<const detail::Segment<V>*> all;
    all.reserve(heap.size() + frozen.size());
    for (const auto& s : heap) all.push_back(&s);
    for (const auto& s : frozen) all.push_back(&s);
    std::sort(all.begin(), all.end(), [](const auto* l, const auto* r) { return l->a < r->a; });
    V value{};
    double error = 0.0;
    for (const auto* s : all) {
      value += s->value;
      error += s->error;
    }
    double refinable = 0.0;
    for (const auto& s : heap) refinable += s.error;
    return std::tuple{value, error, refinable};
  };

  while (true) {
    auto [value, error, refinable] = totals();
    const double target = tol.target(std::abs(value));
    // Panels that can no longer be split set a precision floor; once the
    // refinable part is negligible the (honest) total error is returned.
    if (error <= target || refinable <= 0.25 * target) {
      return {value, error, evaluations};
    }
    if (heap.size() + frozen.size() >= max_intervals) {
      throw ConvergenceError("integrate_finite: subdivision budget exhausted",
                             detail::to_complex(value), error);
    }
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const detail::Segment<V> worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    push(detail::kronrod15(f, worst.a, mid));
    push(detail::kronrod15(f, mid, worst.b));
    evaluations += 30;
  }
}

/// Integral over [0, inf) by progressive interval doubling:
/// [0, L], [L, 2L], [2L, 4L], ... The tail beyond the last panel is bounded
/// by the geometric envelope of the last two panel contributions and the
/// loop stops once that bound is below tol/2.
template <typename F>
auto integrate_semi_infinite(F&& f, Tolerance tol, double first_length = 1.0, std::size_t max_doublings = 80)
    -> QuadResult<detail::value_t<F>> {
  using V = detail::value_t<F>;
  ptcs::detail::require(first_length > 0.0, "integrate_semi_infinite: first_length must be positive");
  const Tolerance panel_tol = tol.scaled(1.0 / 16.0);
  QuadResult<V> acc = integrate_finite(f, 0.0, first_length, panel_tol);
  double prev = std::abs(acc.value);
  double prev_ratio = 1.0;
  double lo = first_length;
  double tail = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < max_doublings; ++k) {
    const auto piece = integrate_finite(f, lo, 2.0 * lo, panel_tol);
    acc.value += piece.value;
    acc.abs_error += piece.abs_error;
    acc.evaluations += piece.evaluations;
    lo *= 2.0;
    const double mag = std::abs(piece.value);
    const double ratio = prev > 0.0 ? mag / prev : (mag == 0.0 ? 0.0 : 1.0);
    const double rho = std::max(ratio, prev_ratio);
    tail = rho < 1.0 ? mag * rho / (1.0 - rho) : std::numeric_limits<double>::infinity();
    if (k >= 1 && tail < 0.5 * tol.target(std::abs(acc.value))) {
      acc.abs_error += tail;
      return acc;
    }
    prev = mag;
    prev_ratio = ratio;
  }
  throw ConvergenceError("integrate_semi_infinite: tail bound did not fall below tolerance",
                         detail::to_complex(acc.value), tail);
}

/// Integral over [0, inf) of an integrand that oscillates with asymptotic
/// half-period `half_period` beyond `start`. [0, start] is integrated
/// adaptively; the rest is cut into half-period panels whose alternating
/// partial sums are accelerated by iterated averaging. The error estimate
/// is the change between the accelerated values of successive panel counts.
template <typename F>
auto integrate_oscillatory(F&& f, double start, double half_period, Tolerance tol, std::size_t max_panels = 400)
    -> QuadResult<detail::value_t<F>> {
  using V = detail::value_t<F>;
  ptcs::detail::require(start >= 0.0 && half_period > 0.0, "integrate_oscillatory: bad panel geometry");
  const Tolerance panel_tol = tol.scaled(1.0 / 64.0);
  QuadResult<V> head{};
  if (start > 0.0) head = integrate_finite(f, 0.0, start, panel_tol);

  constexpr std::size_t kDepth = 24;
  std::vector<V> partial;  // tail partial sums after each panel
  partial.reserve(max_panels);
  V running{};
  std::size_t evaluations = head.evaluations;
  double panel_error = head.abs_error;
  auto accelerate = [&](std::size_t last) {
    // iterated averaging over partial[last-m .. last]
    const std::size_t m = std::min(kDepth, last);
    std::vector<V> row(partial.begin() + static_cast<std::ptrdiff_t>(last - m),
                       partial.begin() + static_cast<std::ptrdiff_t>(last + 1));
    for (std::size_t level = 0; level < m; ++level) {
      for (std::size_t i = 0; i + 1 < row.size() - level; ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
    }
    return row[0];
  };
  V previous{};
  int settled = 0;
  for (std::size_t k = 0; k < max_panels; ++k) {
    const double lo = start + k * half_period;
    const auto piece = integrate_finite(f, lo, lo + half_period, panel_tol);
    running += piece.value;
    evaluations += piece.evaluations;
    panel_error += piece.abs_error;
    partial.push_back(running);
    if (partial.size() < 8) continue;
    const V estimate = accelerate(partial.size() - 1);
    const double change = std::abs(estimate - previous);
    previous = estimate;
    const V total = head.value + estimate;
    if (change < 0.5 * tol.target(std::abs(total))) {
      if (++settled >= 2) return {total, change + panel_error, evaluations};
    } else {
      settled = 0;
    }
  }
  throw ConvergenceError("integrate_oscillatory: accelerated tail did not settle",
                         detail::to_complex(head.value + previous), panel_error);
}

/// Fixed composite Gauss-Legendre rule with `panels` equal panels of N nodes.
template <unsigned N, typename F>
auto integrate_gauss_legendre(F&& f, double a, double b, std::size_t panels) -> detail::value_t<F> {
  using V = detail::value_t<F>;
  using boost::math::quadrature::gauss;
  const auto& x = gauss<double, N>::abscissa();
  const auto& w = gauss<double, N>::weights();
  const double h = (b - a) / static_cast<double>(panels);
  V total{};
  for (std::size_t p = 0; p < panels; ++p) {
    const double centre = a + (p + 0.5) * h;
    V panel{};
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0.0) {
        panel += w[i] * f(centre);
      } else {
        panel += w[i] * (f(centre - 0.5 * h * x[i]) + f(centre + 0.5 * h * x[i]));
      }
    }
    total += panel * (0.5 * h);
  }
  return total;
}

/// Sum of term(0) + term(1) + ... The tail is estimated from the observed
/// geometric decay of three-term magnitude windows, which tolerates isolated
/// near-zero terms (sign changes of orthogonal polynomials). Stops once the
/// tail estimate meets the tolerance.
template <typename T>
auto sum_series(T&& term, Tolerance tol, std::size_t max_terms = 100000)
    -> SeriesResult<std::decay_t<std::invoke_result_t<T&, std::size_t>>> {
  using V = std::decay_t<std::invoke_result_t<T&, std::size_t>>;
  ptcs::detail::require(max_terms >= 1, "sum_series: max_terms must be positive");
  V sum{};
  std::vector<double> mags;
  mags.reserve(256);
  std::size_t growing = 0;
  double tail = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < max_terms; ++n) {
    const V t = term(n);
    sum += t;
    const double m = std::abs(t);
    if (!std::isfinite(m)) {
      throw ConvergenceError("sum_series: non-finite term", detail::to_complex(sum), m);
    }
    mags.push_back(m);
    if (n < 5) continue;
    const double window = mags[n] + mags[n - 1] + mags[n - 2];
    const double before = mags[n - 3] + mags[n - 4] + mags[n - 5];
    if (window == 0.0 && before == 0.0) {
      tail = 0.0;
    } else if (before == 0.0 || window >= before) {
      tail = std::numeric_limits<double>::infinity();
    } else {
      const double rho = std::cbrt(window / before);
      tail = window * rho / (1.0 - rho);
    }
    growing = std::isfinite(tail) ? 0 : growing + 1;
    if (growing >= 50 && mags[n] >= mags[n - 1]) {
      // ratio >= 1 for 50 consecutive terms
      bool persistent = true;
      for (std::size_t j = n - 49; j <= n && persistent; ++j) persistent = mags[j] >= mags[j - 1];
      if (persistent) throw ConvergenceError("sum_series: terms are not decaying", detail::to_complex(sum), tail);
    }
    if (tail <= tol.target(std::abs(sum))) return {sum, n + 1, tail};
  }
  throw ConvergenceError("sum_series: max_terms reached", detail::to_complex(sum), tail);
}

/// Value of a polynomial in h^power through (h_i, v_i), evaluated at h = 0
/// (Neville's scheme). `error` is the change contributed by the last point.
struct Extrapolation {
  double value;
  double error;
};

inline Extrapolation extrapolate_to_zero(std::span<const double> h, std::span<const double> v, double power) {
  ptcs::detail::require(h.size() == v.size() && !h.empty(), "extrapolate_to_zero: size mismatch");
  const std::size_t m = h.size();
  std::vector<double> x(m);
  for (std::size_t i = 0; i < m; ++i) {
    ptcs::detail::require(h[i] > 0.0, "extrapolate_to_zero: abscissae must be positive");
    x[i] = std::pow(h[i], power);
  }
  std::vector<double> p(v.begin(), v.end());
  double before_last = p[0];
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = 0; i + level < m; ++i) {
      p[i] = (x[i] * p[i + 1] - x[i + level] * p[i]) / (x[i] - x[i + level]);
    }
    if (level == m - 1) break;
    before_last = p[0];
  }
  const double error = m > 1 ? std::fabs(p[0] - before_last) : std::numeric_limits<double>::infinity();
  return {p[0], error};
}

}  // namespace ptcs::quad

#endif  // PTCS_QUAD_HPP
