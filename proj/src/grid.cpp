#include "fraclangevin/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fraclangevin/errors.hpp"

namespace fraclangevin {

TimeGrid::TimeGrid(std::vector<double> points) : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw InvalidArgument("time grid needs at least two points");
  }
  if (points_.front() != 0.0) {
    throw InvalidArgument("time grid must start at 0");
  }
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i]) || !(points_[i] > points_[i - 1])) {
      throw InvalidArgument("time grid must be strictly increasing (index " +
                            std::to_string(i) + ")");
    }
  }
}

double TimeGrid::mesh() const noexcept {
  double widest = 0.0;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    widest = std::max(widest, points_[i] - points_[i - 1]);
  }
  return widest;
}

std::size_t TimeGrid::index_of(double t) const {
  auto it = std::lower_bound(points_.begin(), points_.end(),
                             t * (1.0 - 1e-12));
  if (it != points_.end() && std::abs(*it - t) <= 1e-12 * std::abs(t)) {
    return static_cast<std::size_t>(it - points_.begin());
  }
  throw InvalidArgument("time " + std::to_string(t) + " is not a grid point");
}

TimeGrid TimeGrid::prefix(std::size_t count) const {
  return TimeGrid(std::vector<double>(points_.begin(),
                                      points_.begin() + static_cast<long>(count)));
}

Path::Path(TimeGrid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw InvalidArgument("path has " + std::to_string(values_.size()) +
                          " values for a grid of " +
                          std::to_string(grid_.size()) + " points");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw InvalidArgument("path value at index " + std::to_string(i) +
                            " is not finite");
    }
  }
}

TimeGrid uniform_grid(double horizon, std::size_t steps) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw InvalidArgument("horizon must be positive and finite");
  }
  if (steps == 0) {
    throw InvalidArgument("step count must be at least 1");
  }
  std::vector<double> points(steps + 1);
  const double dt = horizon / static_cast<double>(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    points[i] = static_cast<double>(i) * dt;
  }
  points[steps] = horizon;
  return TimeGrid(std::move(points));
}

std::vector<double> increments(const Path& path) {
  auto values = path.values();
  std::vector<double> out(values.size() - 1);
  for (std::size_t i = 1; i < values.size(); ++i) {
    out[i - 1] = values[i] - values[i - 1];
  }
  return out;
}

std::vector<double> cumulative(double start, std::span<const double> steps) {
  std::vector<double> out;
  out.reserve(steps.size() + 1);
  out.push_back(start);
  for (double d : steps) out.push_back(out.back() + d);
  return out;
}

}  // namespace fraclangevin
