#pragma once

#include <span>

#include "fraclangevin/grid.hpp"

namespace fraclangevin {

/// m dV = -b V dt + sigma dB with a deterministic start v0 (mean v0,
/// variance v0_var tracked only in the moment formulas).
struct LangevinParams {
  double mass = 1.0;
  double friction = 1.0;
  double sigma = 1.0;
  double v0 = 0.0;
  double v0_var = 0.0;

  /// Throws InvalidArgument unless mass > 0, friction > 0, sigma >= 0, v0_var >= 0.
  /// Euler-Maruyama also accepts friction == 0.
  void validate(bool allow_zero_friction = false) const;
  double rate() const noexcept { return friction / mass; }
};

/// E V_t = exp(-(b/m) t) E V_0.
double ou_mean(const LangevinParams& params, double t);

/// exp(-2bt/m) Var V_0 + sigma^2 (1 - exp(-2bt/m)) / (2 b m).
double ou_variance(const LangevinParams& params, double t);

/// Exact Gaussian transition between grid points.
Path simulate_ou_exact(const LangevinParams& params, const TimeGrid& grid,
                       const NoiseStream& stream);

/// Explicit Euler-Maruyama driven by the given Brownian increments.
Path simulate_ou_em(const LangevinParams& params, const TimeGrid& grid,
                    std::span<const double> increments);

}  // namespace fraclangevin
