#include "fraclangevin/langevin.hpp"

#include <cmath>
#include <vector>

#include "fraclangevin/errors.hpp"
#include "fraclangevin/rng.hpp"

namespace fraclangevin {

void LangevinParams::validate(bool allow_zero_friction) const {
  if (!(mass > 0.0)) throw InvalidArgument("mass must be positive");
  if (!(friction > 0.0) && !(allow_zero_friction && friction == 0.0)) {
    throw InvalidArgument("friction must be positive");
  }
  if (!(sigma >= 0.0)) throw InvalidArgument("sigma must be nonnegative");
  if (!(v0_var >= 0.0)) throw InvalidArgument("initial variance must be nonnegative");
  if (!std::isfinite(v0)) throw InvalidArgument("initial velocity must be finite");
}

double ou_mean(const LangevinParams& params, double t) {
  params.validate();
  if (!(t >= 0.0)) throw InvalidArgument("ou_mean needs t >= 0");
  return std::exp(-params.rate() * t) * params.v0;
}

double ou_variance(const LangevinParams& params, double t) {
  params.validate();
  if (!(t >= 0.0)) throw InvalidArgument("ou_variance needs t >= 0");
  const double x = 2.0 * params.rate() * t;
  return std::exp(-x) * params.v0_var +
         params.sigma * params.sigma * -std::expm1(-x) /
             (2.0 * params.friction * params.mass);
}

Path simulate_ou_exact(const LangevinParams& params, const TimeGrid& grid,
                       const NoiseStream& stream) {
  params.validate();
  Generator gen(stream);
  const double stationary =
      params.sigma * params.sigma / (2.0 * params.friction * params.mass);
  std::vector<double> values(grid.size());
  values[0] = params.v0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double x = params.rate() * grid.width(i - 1);
    const double decay = std::exp(-x);
    const double spread = std::sqrt(stationary * -std::expm1(-2.0 * x));
    values[i] = decay * values[i - 1] + spread * gen.normal();
  }
  return Path(grid, std::move(values));
}

Path simulate_ou_em(const LangevinParams& params, const TimeGrid& grid,
                    std::span<const double> increments) {
  params.validate(true);
  if (increments.size() != grid.cells()) {
    throw InvalidArgument("simulate_ou_em needs one increment per grid cell");
  }
  std::vector<double> values(grid.size());
  values[0] = params.v0;
  const double drift = params.rate();
  const double scale = params.sigma / params.mass;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v = values[i - 1];
    values[i] = v - drift * v * grid.width(i - 1) + scale * increments[i - 1];
  }
  return Path(grid, std::move(values));
}

}  // namespace fraclangevin
