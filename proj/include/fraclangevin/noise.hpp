#pragma once

#include <vector>

#include "fraclangevin/grid.hpp"
#include "fraclangevin/kernels.hpp"
#include "fraclangevin/rng.hpp"

namespace fraclangevin {

enum class StepKind { Gaussian, Rademacher };

/// Centered i.i.d. steps with standard deviation `sigma`.
struct StepDistribution {
  StepKind kind = StepKind::Rademacher;
  double sigma = 1.0;

  double draw(Generator& gen) const noexcept {
    return sigma * (kind == StepKind::Gaussian ? gen.normal() : gen.rademacher());
  }
};

/// Piecewise-constant function with level levels[k] on
/// [breakpoints[k], breakpoints[k+1]); the last interval ends at support_end.
struct StepFunction {
  std::vector<double> breakpoints;
  std::vector<double> levels;
  double support_end = 0.0;

  double value(double s) const;
  /// integral_0^t of the function, t in [0, support_end].
  double integral(double t) const;
  /// integral over [a, b] divided by (b - a).
  double average(double a, double b) const;
};

/// Independent N(0, t_i - t_{i-1}) variates, one per grid cell.
std::vector<double> gaussian_increments(const TimeGrid& grid, const NoiseStream& stream);

/// Standard Brownian path on `grid` (cumulative gaussian_increments).
Path brownian_path(const TimeGrid& grid, const NoiseStream& stream);

/// Sum of squared increments.
double quadratic_variation(const Path& path);

/// Rescaled random walk X^n(t) = (S_[nt] + (nt - [nt]) xi_{[nt]+1}) / (sigma sqrt n)
/// at its kinks k/n on [0, T]; a final partial step ends exactly at T.
Path donsker_path(std::size_t n, double horizon, const StepDistribution& dist,
                  const NoiseStream& stream);

/// Smoothed white noise with level xi_k / epsilon on [(k-1) eps^2, k eps^2).
///
/// The 1/epsilon amplitude makes integral_0^t theta_eps a Donsker walk with
/// variance t at the breakpoints.
StepFunction theta_epsilon_path(double epsilon, double horizon,
                                const StepDistribution& dist,
                                const NoiseStream& stream);

/// t -> integral_0^t K_H(t, s) theta_eps(s) ds on `grid`, using kernel_weights
/// against the cell averages of theta_eps.
Path smoothed_fbm(const KernelSpec& spec, double epsilon, const TimeGrid& grid,
                  const NoiseStream& stream,
                  const StepDistribution& dist = StepDistribution{});

/// Same, against a precomputed operator.
Path smoothed_fbm(const VolterraOperator& op, double epsilon,
                  const NoiseStream& stream,
                  const StepDistribution& dist = StepDistribution{});

}  // namespace fraclangevin
