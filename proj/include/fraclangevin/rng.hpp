#pragma once

#include <cstdint>
#include <random>

#include "fraclangevin/grid.hpp"

namespace fraclangevin {

/// SplitMix64 finalizer. Used to derive substream seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Random source for one substream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Its seed is mix64(seed ^ mix64(stream_index + golden)), so each
/// (seed, stream_index) pair gives a reproducible, decorrelated sequence.
/// Uniforms take the top 53 bits; normals use Box-Muller with the second
/// variate cached, so no implementation-defined std distribution is involved.
class Generator {
 public:
  explicit Generator(const NoiseStream& stream);

  /// Uniform on the open interval (0, 1).
  double uniform() noexcept;
  /// Standard normal.
  double normal() noexcept;
  /// +1 or -1 with equal probability.
  double rademacher() noexcept;

 private:
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace fraclangevin
