#pragma once

#include <span>
#include <vector>

#include "fraclangevin/grid.hpp"
#include "fraclangevin/kernels.hpp"
#include "fraclangevin/langevin.hpp"

namespace fraclangevin {

/// Kernel and amplitude of Phi_H(t) = A_H t^{1/2 - H}; H != 1/2.
struct FractionalConfig {
  KernelSpec spec;
  double a_h = 1.0;
};

FractionalConfig make_fractional_config(double hurst, double a_h);

/// A_H t^{1/2 - H}, t > 0.
double phi(const FractionalConfig& config, double t);

struct FractionalPath {
  Path base;
  Path transformed;
};

/// V^H_t = V_0 + Phi_H(t) integral_0^t K_H(t, s) V_s ds at every grid point,
/// V at the quadrature midpoints by linear interpolation; V^H_0 = V_0.
FractionalPath fractional_velocity(const FractionalConfig& config, const Path& v);

/// The same transform with the kernel rows of one grid kept in memory, for
/// repeated use on many paths.
class FractionalTransform {
 public:
  FractionalTransform(const FractionalConfig& config, TimeGrid grid);

  const FractionalConfig& config() const noexcept { return config_; }
  const VolterraOperator& op() const noexcept { return op_; }

  /// f_H(t_i) = integral_0^{t_i} K_H(t_i, s) V_s ds; entry 0 is 0.
  std::vector<double> kernel_integrals(const Path& v) const;
  FractionalPath apply(const Path& v) const;

 private:
  FractionalConfig config_;
  VolterraOperator op_;
};

/// E V_0 (1 + Phi_H(t) integral_0^t K_H(t, s) exp(-(b/m) s) ds) with the
/// kernel_weights rule on an n-cell uniform grid of [0, t].
double expected_fractional_velocity(const FractionalConfig& config,
                                    const LangevinParams& params, double t, int n);

struct LangevinResidual {
  /// m sum_j K(t, mid_j) dV_j + b <w(t), V> - sigma B^H(t).
  Path residual;
  /// B^H(t) = sum_j K(t, mid_j) dB_j from the driving increments.
  Path driving_fbm;
  /// max |residual| / (sigma max |B^H|); for sigma = 0 the drift term
  /// max |b <w(t), V>| is the scale.
  double normalized = 0.0;
};

/// Pathwise check of m int K dV = -b int K V ds + sigma B^H for a velocity
/// path produced by simulate_ou_em from `brownian_increments`.
LangevinResidual transformed_langevin_residual(const KernelSpec& spec,
                                               const LangevinParams& params,
                                               const Path& v,
                                               std::span<const double> brownian_increments);

/// Batch form: every path shares one grid, each kernel row is computed once.
std::vector<LangevinResidual> transformed_langevin_residuals(
    const KernelSpec& spec, const LangevinParams& params, std::span<const Path> paths,
    std::span<const std::vector<double>> brownian_increments);

struct AhEstimate {
  double value = 0.0;
  std::vector<double> times;
  /// t_i^{H-1/2} (V^H_i - V_0) / integral_0^{t_i} K_H(t_i, s) V_s ds.
  std::vector<double> ratios;
};

/// Mean over the positive grid points of the per-time ratios. `observed`
/// and `v` must share a grid. Throws DegenerateDenominator when a kernel
/// integral is below 1e-12 of max|V| * sum|w|.
AhEstimate estimate_ah(const KernelSpec& spec, const Path& observed, const Path& v);
AhEstimate estimate_ah(const VolterraOperator& op, const Path& observed, const Path& v);

}  // namespace fraclangevin
