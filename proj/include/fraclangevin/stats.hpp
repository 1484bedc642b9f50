#pragma once

#include <span>
#include <vector>

namespace fraclangevin {

double mean(std::span<const double> xs);
/// Unbiased (n - 1) sample variance.
double sample_variance(std::span<const double> xs);
/// Unbiased sample covariance of two equally long samples.
double sample_covariance(std::span<const double> xs, std::span<const double> ys);

double normal_cdf(double x);

/// sup_x |F_n(x) - Phi(x)| for the empirical CDF of `samples`.
double ks_distance_normal(std::vector<double> samples);

/// Least-squares slope of ys on xs.
double ols_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace fraclangevin
