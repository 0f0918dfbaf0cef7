#ifndef PTCS_GRID_HPP
#define PTCS_GRID_HPP

#include <charconv>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptcs/error.hpp"

namespace ptcs {

/// Evenly spaced sample points start, ..., stop (both included).
struct GridSpec {
  double start = 0.0;
  double stop = std::numbers::pi;
  std::size_t count = 2;

  void validate() const {
    detail::require(std::isfinite(start) && std::isfinite(stop) && start < stop, "grid: need start < stop");
    detail::require(count >= 2, "grid: need at least 2 points");
  }

  [[nodiscard]] std::vector<double> points() const {
    validate();
    std::vector<double> xs(count);
    const double h = (stop - start) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) xs[i] = start + h * static_cast<double>(i);
    xs.back() = stop;
    return xs;
  }

  /// Parses "start:stop:count", e.g. "0:pi:5". A bound is a number or a
  /// scaled pi: `pi`, `-pi`, `2*pi`, `pi/2`, `3*pi/4`.
  static GridSpec parse(std::string_view text);
};

namespace detail {

inline double parse_number(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw DomainError("grid: cannot parse number '" + std::string(s) + "'");
  return v;
}

inline double parse_bound(std::string_view s) {
  const auto at = s.find("pi");
  if (at == std::string_view::npos) return parse_number(s);
  double value = std::numbers::pi;
  std::string_view before = s.substr(0, at);
  std::string_view after = s.substr(at + 2);
  if (!before.empty()) {
    if (before == "-") {
      value = -value;
    } else {
      if (before.back() == '*') before.remove_suffix(1);
      value *= parse_number(before);
    }
  }
  if (!after.empty()) {
    if (after.front() != '/') throw DomainError("grid: cannot parse bound '" + std::string(s) + "'");
    value /= parse_number(after.substr(1));
  }
  return value;
}

}  // namespace detail

inline GridSpec GridSpec::parse(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) throw DomainError("grid: expected start:stop:count");
  GridSpec g;
  g.start = detail::parse_bound(text.substr(0, first));
  g.stop = detail::parse_bound(text.substr(first + 1, second - first - 1));
  const double n = detail::parse_number(text.substr(second + 1));
  if (n != std::floor(n) || n < 0) throw DomainError("grid: count must be a nonnegative integer");
  g.count = static_cast<std::size_t>(n);
  g.validate();
  return g;
}

/// Sampled complex state on an x-grid together with a provenance record
/// of the parameters that produced it.
struct WavefunctionGrid {
  std::vector<double> xs;
  std::vector<std::complex<double>> values;
  std::vector<std::pair<std::string, double>> params;

  [[nodiscard]] bool consistent() const {
    if (xs.size() != values.size()) return false;
    for (std::size_t i = 1; i < xs.size(); ++i) {
      if (!(xs[i - 1] < xs[i])) return false;
    }
    return true;
  }
};

}  // namespace ptcs

#endif  // PTCS_GRID_HPP
