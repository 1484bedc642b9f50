#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fraclangevin {

struct RSEntry {
  std::size_t t = 0;
  double rs = 0.0;
};

/// Rescaled-range values (t, R_t / S_t) for the prefixes with S_t > 0.
struct RSSeries {
  std::vector<RSEntry> entries;
};

struct RegressionFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

struct HurstEstimate {
  double hurst = 0.0;
  double lambda = 0.0;
  double r_squared = 0.0;
  std::size_t points_used = 0;
};

inline constexpr std::size_t kDefaultTMin = 16;

/// m is the mean of the whole series, Y = X - m, Z its running sum,
/// R_t = max(Z_1..Z_t) - min(Z_1..Z_t) and S_t the population standard
/// deviation of X_1..X_t about their own mean.
RSSeries rs_series(std::span<const double> series);

/// Ordinary least squares of ln(rs) on ln(t).
RegressionFit loglog_regression(std::span<const RSEntry> points);

/// R/S slope over the entries with t >= t_min: (R/S)_t ~ lambda t^H.
HurstEstimate estimate_hurst(std::span<const double> series,
                             std::size_t t_min = kDefaultTMin);

}  // namespace fraclangevin
