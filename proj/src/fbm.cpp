#include "fraclangevin/fbm.hpp"

#include <cmath>
#include <string>

#include "fraclangevin/errors.hpp"
#include "fraclangevin/noise.hpp"
#include "fraclangevin/rng.hpp"

namespace fraclangevin {

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

double Matrix::norm_inf() const noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) row += std::abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

CovMatrix covariance_matrix(double hurst, const TimeGrid& grid) {
  const std::size_t dim = grid.cells();
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double r = fbm_covariance(hurst, grid[i + 1], grid[j + 1]);
      m(i, j) = r;
      m(j, i) = r;
    }
  }
  return CovMatrix{grid, hurst, std::move(m)};
}

Matrix cholesky_factor(const Matrix& m) {
  const std::size_t dim = m.dim();
  Matrix l(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    double pivot = m(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= l(j, k) * l(j, k);
    if (!(pivot > 0.0)) {
      throw DecompositionFailure("nonpositive pivot at row " + std::to_string(j));
    }
    const double diag = std::sqrt(pivot);
    l(j, j) = diag;
    for (std::size_t i = j + 1; i < dim; ++i) {
      double sum = m(i, j);
      for (std::size_t k = 0; k < j; ++k) sum -= l(i, k) * l(j, k);
      l(i, j) = sum / diag;
    }
  }
  return l;
}

ExactFbmSampler::ExactFbmSampler(double hurst, TimeGrid grid)
    : cov_(covariance_matrix(hurst, grid)), factor_(cholesky_factor(cov_)) {}

Path ExactFbmSampler::sample(const NoiseStream& stream) const {
  const std::size_t dim = factor_.dim();
  Generator gen(stream);
  std::vector<double> z(dim);
  for (double& x : z) x = gen.normal();
  std::vector<double> values(dim + 1, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    double sum = 0.0;
    for (std::size_t k = 0; k <= i; ++k) sum += factor_(i, k) * z[k];
    values[i + 1] = sum;
  }
  return Path(cov_.grid, std::move(values));
}

Path sample_fbm_exact(double hurst, const TimeGrid& grid, const NoiseStream& stream) {
  return ExactFbmSampler(hurst, grid).sample(stream);
}

KernelFbmSampler::KernelFbmSampler(const KernelSpec& spec, TimeGrid grid)
    : op_(spec, std::move(grid)), last_rms_(op_.grid().size(), 0.0) {
  for (std::size_t i = 1; i < last_rms_.size(); ++i) {
    last_rms_[i] = last_cell_rms(spec, op_.grid()[i], op_.grid().width(i - 1));
  }
}

Path KernelFbmSampler::from_increments(std::span<const double> brownian_increments) const {
  if (brownian_increments.size() != grid().cells()) {
    throw InvalidArgument("need one Brownian increment per grid cell");
  }
  if (op_.spec().regime == Regime::Standard) {
    return Path(grid(), cumulative(0.0, brownian_increments));
  }
  const auto& g = grid();
  std::vector<double> values(g.size(), 0.0);
  for (std::size_t i = 1; i < g.size(); ++i) {
    const auto row = op_.kernel_row(i);
    double sum = 0.0;
    for (std::size_t j = 0; j + 1 < i; ++j) sum += row[j] * brownian_increments[j];
    values[i] = sum + last_rms_[i] * brownian_increments[i - 1];
  }
  return Path(g, std::move(values));
}

Path KernelFbmSampler::sample(const NoiseStream& stream) const {
  return from_increments(gaussian_increments(grid(), stream));
}

Path fbm_from_increments(const KernelSpec& spec, const TimeGrid& grid,
                         std::span<const double> brownian_increments) {
  if (brownian_increments.size() != grid.cells()) {
    throw InvalidArgument("need one Brownian increment per grid cell");
  }
  if (spec.regime == Regime::Standard) {
    return Path(grid, cumulative(0.0, brownian_increments));
  }
  std::vector<double> values(grid.size(), 0.0);
  for_each_kernel_row(spec, grid, [&](std::size_t i, std::span<const double> row, double) {
    double sum = 0.0;
    for (std::size_t j = 0; j + 1 < i; ++j) sum += row[j] * brownian_increments[j];
    values[i] = sum + last_cell_rms(spec, grid[i], grid.width(i - 1)) * brownian_increments[i - 1];
  });
  return Path(grid, std::move(values));
}

Path sample_fbm_kernel(const KernelSpec& spec, const TimeGrid& grid,
                       const NoiseStream& stream) {
  return fbm_from_increments(spec, grid, gaussian_increments(grid, stream));
}

}  // namespace fraclangevin
