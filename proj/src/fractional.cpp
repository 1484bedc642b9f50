#include "fraclangevin/fractional.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fraclangevin/errors.hpp"

namespace fraclangevin {

FractionalConfig make_fractional_config(double hurst, double a_h) {
  auto spec = make_kernel_spec(hurst);
  if (spec.regime == Regime::Standard) {
    throw InvalidArgument("the fractional velocity needs H != 1/2");
  }
  if (!std::isfinite(a_h)) throw InvalidArgument("A_H must be finite");
  return FractionalConfig{spec, a_h};
}

double phi(const FractionalConfig& config, double t) {
  if (!(t > 0.0)) throw InvalidArgument("phi needs t > 0");
  return config.a_h * std::pow(t, 0.5 - config.spec.hurst);
}

namespace {

void require_fractional(const KernelSpec& spec) {
  if (spec.regime == Regime::Standard) {
    throw InvalidArgument("the fractional velocity needs H != 1/2");
  }
}

Path transformed_from_integrals(const FractionalConfig& config, const Path& v,
                                std::span<const double> integrals) {
  std::vector<double> out(v.size());
  out[0] = v[0];
  for (std::size_t i = 1; i < v.size(); ++i) {
    out[i] = v[0] + phi(config, v.time(i)) * integrals[i];
  }
  return Path(v.grid(), std::move(out));
}

double row_dot(const TimeGrid& grid, std::span<const double> row, double last,
               std::span<const double> cell_values) {
  const std::size_t i = row.size();
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < i; ++j) sum += row[j] * grid.width(j) * cell_values[j];
  return sum + last * cell_values[i - 1];
}

double row_abs_weight(const TimeGrid& grid, std::span<const double> row, double last) {
  const std::size_t i = row.size();
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < i; ++j) sum += std::abs(row[j] * grid.width(j));
  return sum + std::abs(last);
}

}  // namespace

FractionalPath fractional_velocity(const FractionalConfig& config, const Path& v) {
  require_fractional(config.spec);
  const auto mids = midpoint_values(v);
  std::vector<double> integrals(v.size(), 0.0);
  for_each_kernel_row(config.spec, v.grid(),
                      [&](std::size_t i, std::span<const double> row, double last) {
                        integrals[i] = row_dot(v.grid(), row, last, mids);
                      });
  return FractionalPath{v, transformed_from_integrals(config, v, integrals)};
}

FractionalTransform::FractionalTransform(const FractionalConfig& config, TimeGrid grid)
    : config_(config), op_(config.spec, std::move(grid)) {
  require_fractional(config.spec);
}

std::vector<double> FractionalTransform::kernel_integrals(const Path& v) const {
  if (!(v.grid() == op_.grid())) {
    throw InvalidArgument("path grid differs from the transform grid");
  }
  return op_.integrate(midpoint_values(v));
}

FractionalPath FractionalTransform::apply(const Path& v) const {
  const auto integrals = kernel_integrals(v);
  return FractionalPath{v, transformed_from_integrals(config_, v, integrals)};
}

double expected_fractional_velocity(const FractionalConfig& config,
                                    const LangevinParams& params, double t, int n) {
  require_fractional(config.spec);
  params.validate();
  if (!(t > 0.0)) throw InvalidArgument("expected_fractional_velocity needs t > 0");
  if (n < 16) throw InvalidArgument("expected_fractional_velocity needs n >= 16");
  const auto grid = uniform_grid(t, static_cast<std::size_t>(n));
  const auto rule = kernel_weights(config.spec, t, grid);
  double integral = 0.0;
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    integral += rule.weights[j] * std::exp(-params.rate() * rule.nodes[j]);
  }
  return params.v0 * (1.0 + phi(config, t) * integral);
}

std::vector<LangevinResidual> transformed_langevin_residuals(
    const KernelSpec& spec, const LangevinParams& params, std::span<const Path> paths,
    std::span<const std::vector<double>> brownian_increments) {
  params.validate(true);
  if (paths.size() != brownian_increments.size()) {
    throw InvalidArgument("one increment sequence per path is required");
  }
  if (paths.empty()) return {};
  const TimeGrid& grid = paths.front().grid();
  const std::size_t count = paths.size();
  std::vector<std::vector<double>> dv(count), mids(count);
  for (std::size_t p = 0; p < count; ++p) {
    if (!(paths[p].grid() == grid)) {
      throw InvalidArgument("all paths must share one grid");
    }
    if (brownian_increments[p].size() != grid.cells()) {
      throw InvalidArgument("path " + std::to_string(p) + ": expected " +
                            std::to_string(grid.cells()) + " increments, got " +
                            std::to_string(brownian_increments[p].size()));
    }
    dv[p] = increments(paths[p]);
    mids[p] = midpoint_values(paths[p]);
  }

  std::vector<std::vector<double>> residual(count, std::vector<double>(grid.size(), 0.0));
  std::vector<std::vector<double>> fbm(count, std::vector<double>(grid.size(), 0.0));
  std::vector<double> drift_scale(count, 0.0);
  for_each_kernel_row(spec, grid, [&](std::size_t i, std::span<const double> row, double last) {
    for (std::size_t p = 0; p < count; ++p) {
      const auto& db = brownian_increments[p];
      double lhs = 0.0;
      double bh = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        lhs += row[j] * dv[p][j];
        bh += row[j] * db[j];
      }
      const double drift = params.friction * row_dot(grid, row, last, mids[p]);
      residual[p][i] = params.mass * lhs + drift - params.sigma * bh;
      fbm[p][i] = bh;
      drift_scale[p] = std::max(drift_scale[p], std::abs(drift));
    }
  });

  std::vector<LangevinResidual> out;
  out.reserve(count);
  for (std::size_t p = 0; p < count; ++p) {
    double worst = 0.0;
    double fbm_scale = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      worst = std::max(worst, std::abs(residual[p][i]));
      fbm_scale = std::max(fbm_scale, std::abs(fbm[p][i]));
    }
    const double scale = params.sigma > 0.0 ? params.sigma * fbm_scale : drift_scale[p];
    out.push_back(LangevinResidual{Path(grid, std::move(residual[p])),
                                   Path(grid, std::move(fbm[p])),
                                   scale > 0.0 ? worst / scale : worst});
  }
  return out;
}

LangevinResidual transformed_langevin_residual(const KernelSpec& spec,
                                               const LangevinParams& params,
                                               const Path& v,
                                               std::span<const double> brownian_increments) {
  std::vector<std::vector<double>> incs{
      std::vector<double>(brownian_increments.begin(), brownian_increments.end())};
  auto out = transformed_langevin_residuals(spec, params, std::span<const Path>(&v, 1), incs);
  return std::move(out.front());
}

namespace {

template <typename RowSource>
AhEstimate estimate_from_rows(const KernelSpec& spec, const Path& observed, const Path& v,
                              RowSource&& rows) {
  require_fractional(spec);
  if (!(observed.grid() == v.grid())) {
    throw InvalidArgument("observed and velocity paths must share a grid");
  }
  const TimeGrid& grid = v.grid();
  const auto mids = midpoint_values(v);
  double vmax = 0.0;
  for (double x : v.values()) vmax = std::max(vmax, std::abs(x));
  const double v0 = v[0];

  AhEstimate est;
  est.times.reserve(grid.cells());
  est.ratios.reserve(grid.cells());
  rows([&](std::size_t i, std::span<const double> row, double last) {
    const double t = grid[i];
    const double denom = row_dot(grid, row, last, mids);
    const double scale = vmax * row_abs_weight(grid, row, last);
    if (std::abs(denom) <= 1e-12 * scale) {
      throw DegenerateDenominator(
          t, "kernel integral of the velocity vanishes at t=" + std::to_string(t));
    }
    est.times.push_back(t);
    est.ratios.push_back(std::pow(t, spec.hurst - 0.5) * (observed[i] - v0) / denom);
  });
  double sum = 0.0;
  for (double r : est.ratios) sum += r;
  est.value = sum / static_cast<double>(est.ratios.size());
  return est;
}

}  // namespace

AhEstimate estimate_ah(const KernelSpec& spec, const Path& observed, const Path& v) {
  return estimate_from_rows(spec, observed, v, [&](auto&& visit) {
    for_each_kernel_row(spec, v.grid(), visit);
  });
}

AhEstimate estimate_ah(const VolterraOperator& op, const Path& observed, const Path& v) {
  if (!(v.grid() == op.grid())) {
    throw InvalidArgument("velocity grid differs from the operator grid");
  }
  return estimate_from_rows(op.spec(), observed, v, [&](auto&& visit) {
    for (std::size_t i = 1; i < op.grid().size(); ++i) {
      visit(i, op.kernel_row(i), op.last_weight(i));
    }
  });
}

}  // namespace fraclangevin
