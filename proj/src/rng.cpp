#include "fraclangevin/rng.hpp"

#include <cmath>
#include <numbers>

namespace fraclangevin {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Generator::Generator(const NoiseStream& stream)
    : engine_(mix64(stream.seed ^ mix64(stream.stream_index + 0x632be59bd9b4e019ULL))) {}

double Generator::uniform() noexcept {
  // (k + 0.5) / 2^53 never hits 0 or 1.
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double Generator::normal() noexcept {
  if (has_cached_) {
    has_cached_ = false;
    return cached_normal_;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  cached_normal_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

double Generator::rademacher() noexcept {
  return (engine_() >> 63) != 0 ? 1.0 : -1.0;
}

}  // namespace fraclangevin
