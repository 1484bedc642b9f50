#include "fraclangevin/hurst.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fraclangevin/errors.hpp"

namespace fraclangevin {

RSSeries rs_series(std::span<const double> series) {
  const std::size_t n = series.size();
  if (n < 2) throw InvalidArgument("R/S analysis needs at least two values");
  double mean = 0.0;
  for (double x : series) mean += x;
  mean /= static_cast<double>(n);

  RSSeries out;
  double z = 0.0;
  double z_max = 0.0;
  double z_min = 0.0;
  // Welford running moments of the prefix.
  double prefix_mean = 0.0;
  double prefix_m2 = 0.0;
  for (std::size_t t = 1; t <= n; ++t) {
    // Centred values feed both Z and the prefix moments.
    const double x = series[t - 1] - mean;
    z += x;
    if (t == 1) {
      z_max = z;
      z_min = z;
    } else {
      z_max = std::max(z_max, z);
      z_min = std::min(z_min, z);
    }
    const double delta = x - prefix_mean;
    prefix_mean += delta / static_cast<double>(t);
    prefix_m2 += delta * (x - prefix_mean);
    if (t < 2) continue;
    const double s = std::sqrt(prefix_m2 / static_cast<double>(t));
    if (s > 0.0) out.entries.push_back({t, (z_max - z_min) / s});
  }
  if (out.entries.empty()) {
    throw DegenerateSeries("series is constant: no prefix has a positive standard deviation");
  }
  return out;
}

RegressionFit loglog_regression(std::span<const RSEntry> points) {
  if (points.size() < 2) throw InvalidArgument("regression needs at least two points");
  const double count = static_cast<double>(points.size());
  double mx = 0.0;
  double my = 0.0;
  for (const auto& p : points) {
    if (p.t < 1 || !(p.rs > 0.0)) {
      throw InvalidArgument("regression needs t >= 1 and rs > 0");
    }
    mx += std::log(static_cast<double>(p.t));
    my += std::log(p.rs);
  }
  mx /= count;
  my /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const auto& p : points) {
    const double dx = std::log(static_cast<double>(p.t)) - mx;
    const double dy = std::log(p.rs) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) throw InvalidArgument("regression needs distinct t values");
  RegressionFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 1.0;
  return fit;
}

HurstEstimate estimate_hurst(std::span<const double> series, std::size_t t_min) {
  if (t_min < 2) throw InvalidArgument("t_min must be at least 2");
  const auto rs = rs_series(series);
  std::vector<RSEntry> kept;
  std::copy_if(rs.entries.begin(), rs.entries.end(), std::back_inserter(kept),
               [t_min](const RSEntry& e) { return e.t >= t_min; });
  if (kept.size() < 2) {
    throw InvalidArgument("only " + std::to_string(kept.size()) +
                          " R/S points with t >= " + std::to_string(t_min) +
                          "; need at least 2");
  }
  const auto fit = loglog_regression(kept);
  return HurstEstimate{fit.slope, std::exp(fit.intercept), fit.r_squared, kept.size()};
}

}  // namespace fraclangevin
