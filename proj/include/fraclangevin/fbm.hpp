#pragma once

#include <cstddef>
#include <vector>

#include "fraclangevin/grid.hpp"
#include "fraclangevin/kernels.hpp"

namespace fraclangevin {

/// Dense row-major square matrix.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

  static Matrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * dim_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * dim_ + j];
  }
  /// Largest absolute row sum.
  double norm_inf() const noexcept;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

/// fBm covariance R_H(t_i, t_j) over the positive points of a grid.
/// Index k of the matrix is grid point k + 1.
struct CovMatrix {
  TimeGrid grid;
  double hurst;
  Matrix entries;
};

CovMatrix covariance_matrix(double hurst, const TimeGrid& grid);

/// Lower-triangular L with L L^T = m. Throws DecompositionFailure on a
/// nonpositive pivot.
Matrix cholesky_factor(const Matrix& m);
inline Matrix cholesky_factor(const CovMatrix& cov) { return cholesky_factor(cov.entries); }

/// Exact Gaussian sampling of fBm at the grid points through the Cholesky
/// factor of its covariance. The factor is computed once per sampler.
class ExactFbmSampler {
 public:
  ExactFbmSampler(double hurst, TimeGrid grid);

  const TimeGrid& grid() const noexcept { return cov_.grid; }
  const Matrix& factor() const noexcept { return factor_; }
  Path sample(const NoiseStream& stream) const;

 private:
  CovMatrix cov_;
  Matrix factor_;
};

Path sample_fbm_exact(double hurst, const TimeGrid& grid, const NoiseStream& stream);

/// Volterra synthesis B^H(t_i) = sum_j K_H(t_i, midpoint_j) dB_j with Brownian
/// increments dB from gaussian_increments on the same stream. The cell ending
/// at t_i uses the root mean square of K_H(t_i, .) over that cell instead of
/// the midpoint value.
class KernelFbmSampler {
 public:
  KernelFbmSampler(const KernelSpec& spec, TimeGrid grid);

  const TimeGrid& grid() const noexcept { return op_.grid(); }
  const VolterraOperator& op() const noexcept { return op_; }
  Path sample(const NoiseStream& stream) const;
  /// Synthesis from caller-supplied Brownian increments.
  Path from_increments(std::span<const double> brownian_increments) const;

 private:
  VolterraOperator op_;
  std::vector<double> last_rms_;
};

Path sample_fbm_kernel(const KernelSpec& spec, const TimeGrid& grid,
                       const NoiseStream& stream);

/// Volterra synthesis for given Brownian increments; rows computed on the fly.
Path fbm_from_increments(const KernelSpec& spec, const TimeGrid& grid,
                         std::span<const double> brownian_increments);

}  // namespace fraclangevin
