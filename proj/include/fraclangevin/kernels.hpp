#pragma once

#include <vector>

#include "fraclangevin/grid.hpp"

namespace fraclangevin {

enum class Regime { AboveHalf, BelowHalf, Standard };

/// Hurst index, its regime and the kernel normalizing constant.
///
/// Regime::Standard (|H - 1/2| < 1e-6) stands for Brownian motion: K = 1
/// and c_H is never evaluated.
struct KernelSpec {
  double hurst = 0.5;
  Regime regime = Regime::Standard;
  double c_h = 0.0;
};

/// Nodes/weights discretizing s -> integral_0^t K_H(t, s) f(s) ds.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double target_time = 0.0;

  /// sum_j weights[j] * values[j]; `values` sampled at the nodes.
  double apply(std::span<const double> values) const;
};

inline constexpr double kStandardBand = 1e-6;

KernelSpec make_kernel_spec(double hurst);

/// K_H(t, s) for 0 < s < t.
///
/// Above 1/2:  c_H s^{1/2-H} int_s^t (u-s)^{H-3/2} u^{H-1/2} du.
/// Below 1/2:  c_H [ (t/s)^{H-1/2} (t-s)^{H-1/2}
///                   - (H-1/2) s^{1/2-H} int_s^t u^{H-3/2} (u-s)^{H-1/2} du ].
/// The inner integrals are computed after the substitution x = (u-s)^{e}
/// (e = H-1/2 above, H+1/2 below) which removes the endpoint singularity.
double kernel_value(const KernelSpec& spec, double t, double s);

/// dK_H/dt in closed form; diverges as s -> t.
double kernel_dt(const KernelSpec& spec, double t, double s);

/// R_H(t, s) = (t^{2H} + s^{2H} - |t - s|^{2H}) / 2.
double fbm_covariance(double hurst, double s, double t);

/// Midpoint rule for the kernel integral up to grid point `t`. In the
/// BelowHalf regime the last cell integrates the (t - s)^{H-1/2} factor
/// exactly.
QuadratureRule kernel_weights(const KernelSpec& spec, double t,
                              const TimeGrid& grid);

/// Weight of the last cell below `t` (cell [t - width, t]) for kernel_weights.
double last_cell_weight(const KernelSpec& spec, double t, double width);

/// Root mean square of K_H(t, .) over the last cell below `t`; the BelowHalf
/// singularity is integrated exactly, otherwise K_H(t, midpoint).
double last_cell_rms(const KernelSpec& spec, double t, double width);

/// |Q - R_H(t,s)| / R_H(t,s) with Q the n-cell product quadrature of
/// int_0^{s^t} K_H(t,u) K_H(s,u) du.
double verify_covariance_identity(const KernelSpec& spec, double s, double t,
                                  int n);

/// Integral of (1 + y^p)^q over [0, upper] by graded Gauss-Legendre panels.
/// The building block of both inner kernel integrals; exposed for testing.
double scaled_inner_integral(double p, double q, double upper);

}  // namespace fraclangevin

namespace fraclangevin {

/// Visits every positive grid point t_i of `grid` in order and hands over
/// K_H(t_i, midpoint_j) for the cells j < i together with the kernel_weights
/// weight of the last cell. Rows are computed on the fly; nothing is stored.
template <typename Visitor>
void for_each_kernel_row(const KernelSpec& spec, const TimeGrid& grid,
                         Visitor&& visit);

/// Kernel rows of one grid, precomputed and packed (row i holds i entries).
/// Memory grows as n^2 / 2 doubles.
class VolterraOperator {
 public:
  VolterraOperator(KernelSpec spec, TimeGrid grid);

  const KernelSpec& spec() const noexcept { return spec_; }
  const TimeGrid& grid() const noexcept { return grid_; }

  /// K_H(t_i, midpoint_j), j < i.
  std::span<const double> kernel_row(std::size_t i) const noexcept {
    return {packed_.data() + i * (i - 1) / 2, i};
  }
  double last_weight(std::size_t i) const noexcept { return last_weight_[i]; }

  /// sum_j w_ij f_j with kernel_weights rows; `cell_values` holds f at the
  /// cell midpoints. Entry 0 of the result is 0.
  std::vector<double> integrate(std::span<const double> cell_values) const;

  /// sum_j K_H(t_i, midpoint_j) dX_j for per-cell increments dX.
  std::vector<double> stochastic_integral(std::span<const double> cell_increments) const;

 private:
  KernelSpec spec_;
  TimeGrid grid_;
  std::vector<double> packed_;
  std::vector<double> last_weight_;
};

/// Per-cell averages of a sampled path's linear interpolant (midpoint values).
std::vector<double> midpoint_values(const Path& path);

template <typename Visitor>
void for_each_kernel_row(const KernelSpec& spec, const TimeGrid& grid,
                         Visitor&& visit) {
  std::vector<double> row;
  row.reserve(grid.cells());
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double t = grid[i];
    row.resize(i);
    for (std::size_t j = 0; j < i; ++j) {
      row[j] = spec.regime == Regime::Standard
                   ? 1.0
                   : kernel_value(spec, t, grid.midpoint(j));
    }
    const double last = last_cell_weight(spec, t, grid.width(i - 1));
    visit(i, std::span<const double>(row), last);
  }
}

}  // namespace fraclangevin
