#include "fraclangevin/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fraclangevin/errors.hpp"

namespace fraclangevin {

double mean(std::span<const double> xs) {
  if (xs.empty()) throw InvalidArgument("mean of an empty sample");
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

double sample_covariance(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw InvalidArgument("covariance needs two samples of equal size >= 2");
  }
  const double mx = mean(xs);
  const double my = mean(ys);
  double sum = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) sum += (xs[i] - mx) * (ys[i] - my);
  return sum / static_cast<double>(xs.size() - 1);
}

double sample_variance(std::span<const double> xs) { return sample_covariance(xs, xs); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double ks_distance_normal(std::vector<double> samples) {
  if (samples.empty()) throw InvalidArgument("KS distance of an empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = normal_cdf(samples[i]);
    worst = std::max({worst, static_cast<double>(i + 1) / n - f,
                      f - static_cast<double>(i) / n});
  }
  return worst;
}

double ols_slope(std::span<const double> xs, std::span<const double> ys) {
  const double mx = mean(xs);
  const double my = mean(ys);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (!(sxx > 0.0)) throw InvalidArgument("slope needs distinct abscissae");
  return sxy / sxx;
}

}  // namespace fraclangevin
