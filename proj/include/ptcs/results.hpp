#ifndef PTCS_RESULTS_HPP
#define PTCS_RESULTS_HPP

#include <complex>
#include <cstddef>

namespace ptcs {

/// Value of a numerical integral together with its error bookkeeping.
template <typename T = double>
struct QuadResult {
  T value{};
  double abs_error = 0.0;
  std::size_t evaluations = 0;
};

/// Value of a truncated series. `tail_estimate` bounds the discarded terms.
template <typename T = std::complex<double>>
struct SeriesResult {
  T value{};
  std::size_t terms_used = 0;
  double tail_estimate = 0.0;
};

}  // namespace ptcs

#endif  // PTCS_RESULTS_HPP
