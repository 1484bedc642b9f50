#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fraclangevin {

/// Strictly increasing time mesh starting at 0.
class TimeGrid {
 public:
  /// Validates the points; throws InvalidArgument unless points[0] == 0,
  /// the sequence is strictly increasing and has at least two entries.
  explicit TimeGrid(std::vector<double> points);

  std::span<const double> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  std::size_t cells() const noexcept { return points_.size() - 1; }
  double operator[](std::size_t i) const noexcept { return points_[i]; }
  double horizon() const noexcept { return points_.back(); }
  double width(std::size_t cell) const noexcept {
    return points_[cell + 1] - points_[cell];
  }
  double midpoint(std::size_t cell) const noexcept {
    return 0.5 * (points_[cell] + points_[cell + 1]);
  }
  /// Largest cell width.
  double mesh() const noexcept;

  /// Index of the grid point equal to `t` (relative tolerance 1e-12), or
  /// InvalidArgument if `t` is not on the grid.
  std::size_t index_of(double t) const;

  /// Grid made of the first `count` points.
  TimeGrid prefix(std::size_t count) const;

  bool operator==(const TimeGrid&) const = default;

 private:
  std::vector<double> points_;
};

/// A real-valued sample path aligned with a grid.
class Path {
 public:
  Path(TimeGrid grid, std::vector<double> values);

  const TimeGrid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double time(std::size_t i) const noexcept { return grid_[i]; }

  /// Linear interpolation at the midpoint of `cell`.
  double at_midpoint(std::size_t cell) const noexcept {
    return 0.5 * (values_[cell] + values_[cell + 1]);
  }

 private:
  TimeGrid grid_;
  std::vector<double> values_;
};

/// Seed plus substream index. Identical pairs yield identical variates.
struct NoiseStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_index = 0;

  NoiseStream substream(std::uint64_t index) const noexcept {
    return NoiseStream{seed, index};
  }
};

TimeGrid uniform_grid(double horizon, std::size_t steps);

/// values[i] - values[i-1] for i = 1..n.
std::vector<double> increments(const Path& path);

/// Prefix sums starting at `start`; inverse of `increments`.
std::vector<double> cumulative(double start, std::span<const double> steps);

}  // namespace fraclangevin
