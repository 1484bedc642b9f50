#include "fraclangevin/noise.hpp"

#include <algorithm>
#include <cmath>

#include "fraclangevin/errors.hpp"

namespace fraclangevin {

namespace {

std::size_t interval_of(const StepFunction& f, double s) {
  auto it = std::upper_bound(f.breakpoints.begin(), f.breakpoints.end(), s);
  if (it == f.breakpoints.begin()) return 0;
  return std::min<std::size_t>(static_cast<std::size_t>(it - f.breakpoints.begin()) - 1,
                               f.levels.size() - 1);
}

}  // namespace

double StepFunction::value(double s) const {
  if (s < 0.0 || s > support_end) {
    throw InvalidArgument("step function evaluated outside its support");
  }
  return levels[interval_of(*this, s)];
}

double StepFunction::integral(double t) const {
  if (t < 0.0 || t > support_end * (1.0 + 1e-12)) {
    throw InvalidArgument("step function integrated outside its support");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const double lo = breakpoints[k];
    if (lo >= t) break;
    const double hi = k + 1 < breakpoints.size() ? breakpoints[k + 1] : support_end;
    sum += levels[k] * (std::min(hi, t) - lo);
  }
  return sum;
}

double StepFunction::average(double a, double b) const {
  if (!(b > a)) throw InvalidArgument("average needs a < b");
  // Walk only the intervals that intersect [a, b].
  double sum = 0.0;
  for (std::size_t k = interval_of(*this, a); k < levels.size(); ++k) {
    const double lo = std::max(breakpoints[k], a);
    const double hi = std::min(k + 1 < breakpoints.size() ? breakpoints[k + 1] : support_end, b);
    if (lo >= b) break;
    if (hi > lo) sum += levels[k] * (hi - lo);
  }
  return sum / (b - a);
}

std::vector<double> gaussian_increments(const TimeGrid& grid, const NoiseStream& stream) {
  Generator gen(stream);
  std::vector<double> out(grid.cells());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = std::sqrt(grid.width(j)) * gen.normal();
  }
  return out;
}

Path brownian_path(const TimeGrid& grid, const NoiseStream& stream) {
  return Path(grid, cumulative(0.0, gaussian_increments(grid, stream)));
}

double quadratic_variation(const Path& path) {
  double sum = 0.0;
  auto v = path.values();
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double d = v[i] - v[i - 1];
    sum += d * d;
  }
  return sum;
}

Path donsker_path(std::size_t n, double horizon, const StepDistribution& dist,
                  const NoiseStream& stream) {
  if (n == 0) throw InvalidArgument("donsker_path needs n >= 1");
  if (!(horizon > 0.0)) throw InvalidArgument("donsker_path needs a positive horizon");
  if (!(dist.sigma > 0.0)) throw InvalidArgument("step distribution needs sigma > 0");
  const double nd = static_cast<double>(n);
  const double scaled = nd * horizon;
  auto cells = static_cast<std::size_t>(std::ceil(scaled - 1e-9));
  cells = std::max<std::size_t>(cells, 1);
  const double norm = dist.sigma * std::sqrt(nd);

  Generator gen(stream);
  std::vector<double> points(cells + 1);
  std::vector<double> values(cells + 1);
  double walk = 0.0;
  for (std::size_t k = 1; k <= cells; ++k) {
    const double xi = dist.draw(gen);
    if (k < cells) {
      points[k] = static_cast<double>(k) / nd;
      walk += xi;
      values[k] = walk / norm;
    } else {
      const double fraction = scaled - static_cast<double>(cells - 1);
      points[k] = horizon;
      values[k] = (walk + std::min(fraction, 1.0) * xi) / norm;
    }
  }
  return Path(TimeGrid(std::move(points)), std::move(values));
}

StepFunction theta_epsilon_path(double epsilon, double horizon,
                                const StepDistribution& dist,
                                const NoiseStream& stream) {
  if (!(epsilon > 0.0) || !(horizon > 0.0)) {
    throw InvalidArgument("theta_epsilon_path needs epsilon > 0 and T > 0");
  }
  const double step = epsilon * epsilon;
  const auto count = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(horizon / step - 1e-9)));
  Generator gen(stream);
  StepFunction f;
  f.support_end = horizon;
  f.breakpoints.resize(count);
  f.levels.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    f.breakpoints[k] = static_cast<double>(k) * step;
    f.levels[k] = dist.draw(gen) / epsilon;
  }
  return f;
}

namespace {

std::vector<double> cell_averages(const StepFunction& theta, const TimeGrid& grid) {
  std::vector<double> out(grid.cells());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = theta.average(grid[j], grid[j + 1]);
  }
  return out;
}

}  // namespace

Path smoothed_fbm(const KernelSpec& spec, double epsilon, const TimeGrid& grid,
                  const NoiseStream& stream, const StepDistribution& dist) {
  const auto theta = theta_epsilon_path(epsilon, grid.horizon(), dist, stream);
  const auto averages = cell_averages(theta, grid);
  if (spec.regime == Regime::Standard) {
    std::vector<double> areas(averages.size());
    for (std::size_t j = 0; j < areas.size(); ++j) areas[j] = averages[j] * grid.width(j);
    return Path(grid, cumulative(0.0, areas));
  }
  std::vector<double> values(grid.size(), 0.0);
  for_each_kernel_row(spec, grid, [&](std::size_t i, std::span<const double> row, double last) {
    double sum = 0.0;
    for (std::size_t j = 0; j + 1 < i; ++j) sum += row[j] * grid.width(j) * averages[j];
    values[i] = sum + last * averages[i - 1];
  });
  return Path(grid, std::move(values));
}

Path smoothed_fbm(const VolterraOperator& op, double epsilon, const NoiseStream& stream,
                  const StepDistribution& dist) {
  const auto theta = theta_epsilon_path(epsilon, op.grid().horizon(), dist, stream);
  return Path(op.grid(), op.integrate(cell_averages(theta, op.grid())));
}

}  // namespace fraclangevin
