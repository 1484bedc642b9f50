#include "fraclangevin/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fraclangevin/errors.hpp"
#include "fraclangevin/special.hpp"

namespace fraclangevin {

namespace {

constexpr int kPanelOrder = 10;
constexpr int kGradingLevels = 6;

const GaussLegendre& panel_rule() {
  static const GaussLegendre rule = gauss_legendre(kPanelOrder);
  return rule;
}

double integrand(double y, double p, double q) {
  return std::pow(1.0 + std::pow(y, p), q);
}

double gauss_panel(double lo, double hi, double p, double q) {
  const auto& rule = panel_rule();
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    sum += rule.weights[k] * integrand(mid + half * rule.nodes[k], p, q);
  }
  return sum * half;
}

// Uniform panels over [lo, hi], `count` of them.
double gauss_uniform(double lo, double hi, int count, double p, double q) {
  double sum = 0.0;
  const double step = (hi - lo) / count;
  for (int k = 0; k < count; ++k) {
    const double a = lo + k * step;
    const double b = (k + 1 == count) ? hi : a + step;
    sum += gauss_panel(a, b, p, q);
  }
  return sum;
}

// The complex singularities of (1 + y^p)^q sit on |y| = 1 at angle pi/p from
// the real axis; panels near y = 1 must be narrower than about 6/p.
int panels_near_one(double p) {
  return std::max(1, static_cast<int>(std::ceil(p / 6.0)));
}

bool is_integer(double p) { return std::abs(p - std::round(p)) < 1e-12; }

// Decomposition K = singular * (t - s)^{H-1/2} + regular. Only the BelowHalf
// regime has a nonzero singular coefficient.
struct KernelParts {
  double singular = 0.0;
  double regular = 0.0;
};

KernelParts kernel_parts(const KernelSpec& spec, double t, double s) {
  const double a = spec.hurst - 0.5;
  switch (spec.regime) {
    case Regime::Standard:
      return {0.0, 1.0};
    case Regime::AboveHalf: {
      const double upper = std::pow((t - s) / s, a);
      const double psi = scaled_inner_integral(1.0 / a, a, upper);
      return {0.0, spec.c_h * std::pow(s, a) * psi / a};
    }
    case Regime::BelowHalf: {
      const double e = spec.hurst + 0.5;
      const double upper = std::pow((t - s) / s, e);
      const double psi = scaled_inner_integral(1.0 / e, spec.hurst - 1.5, upper);
      return {spec.c_h * std::pow(t / s, a),
              -spec.c_h * a * std::pow(s, a) * psi / e};
    }
  }
  return {};
}

void check_open_interval(double t, double s, const char* what) {
  if (!(s > 0.0) || !(s < t) || !std::isfinite(t)) {
    throw InvalidArgument(std::string(what) + " needs 0 < s < t (got s=" +
                          std::to_string(s) + ", t=" + std::to_string(t) + ")");
  }
}

}  // namespace

double QuadratureRule::apply(std::span<const double> values) const {
  if (values.size() != weights.size()) {
    throw InvalidArgument("quadrature rule has " +
                          std::to_string(weights.size()) + " nodes but got " +
                          std::to_string(values.size()) + " values");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) sum += weights[j] * values[j];
  return sum;
}

double scaled_inner_integral(double p, double q, double upper) {
  if (!(upper > 0.0)) return 0.0;
  const double lower_part = std::min(upper, 1.0);
  const int near_one = panels_near_one(p);
  double sum = 0.0;
  if (is_integer(p)) {
    sum += gauss_uniform(0.0, lower_part, near_one, p, q);
  } else {
    // y^p has a derivative singularity at 0: grade geometrically toward it.
    double hi = lower_part;
    if (near_one > 1) {
      hi = lower_part * 0.5;
      sum += gauss_uniform(hi, lower_part, near_one, p, q);
    }
    for (int level = 0; level < kGradingLevels; ++level) {
      const double lo = hi * 0.5;
      sum += gauss_panel(lo, hi, p, q);
      hi = lo;
    }
    sum += gauss_panel(0.0, hi, p, q);
  }
  if (upper > 1.0) {
    const double first = std::min(upper, 2.0);
    sum += gauss_uniform(1.0, first, near_one, p, q);
    for (double lo = 2.0; lo < upper; lo *= 2.0) {
      sum += gauss_panel(lo, std::min(2.0 * lo, upper), p, q);
    }
  }
  return sum;
}

KernelSpec make_kernel_spec(double hurst) {
  if (!(hurst > 0.0 && hurst < 1.0)) {
    throw InvalidArgument("Hurst index must lie in (0, 1), got " +
                          std::to_string(hurst));
  }
  KernelSpec spec;
  spec.hurst = hurst;
  if (std::abs(hurst - 0.5) < kStandardBand) {
    spec.regime = Regime::Standard;
  } else if (hurst > 0.5) {
    spec.regime = Regime::AboveHalf;
    spec.c_h = std::sqrt(hurst * (2.0 * hurst - 1.0) /
                         beta_fn(2.0 - 2.0 * hurst, hurst - 0.5));
  } else {
    spec.regime = Regime::BelowHalf;
    spec.c_h = std::sqrt(2.0 * hurst / ((1.0 - 2.0 * hurst) *
                                        beta_fn(1.0 - 2.0 * hurst, hurst + 0.5)));
  }
  return spec;
}

double kernel_value(const KernelSpec& spec, double t, double s) {
  check_open_interval(t, s, "kernel_value");
  const auto parts = kernel_parts(spec, t, s);
  if (parts.singular == 0.0) return parts.regular;
  return parts.singular * std::pow(t - s, spec.hurst - 0.5) + parts.regular;
}

double kernel_dt(const KernelSpec& spec, double t, double s) {
  check_open_interval(t, s, "kernel_dt");
  const double a = spec.hurst - 0.5;
  const double base = spec.c_h * std::pow(t / s, a) * std::pow(t - s, a - 1.0);
  switch (spec.regime) {
    case Regime::Standard:
      return 0.0;
    case Regime::AboveHalf:
      return base;
    case Regime::BelowHalf:
      return a * base;
  }
  return 0.0;
}

double fbm_covariance(double hurst, double s, double t) {
  if (!(hurst > 0.0 && hurst < 1.0)) {
    throw InvalidArgument("Hurst index must lie in (0, 1)");
  }
  if (!(s >= 0.0) || !(t >= 0.0)) {
    throw InvalidArgument("fbm_covariance needs nonnegative times");
  }
  const double two_h = 2.0 * hurst;
  return 0.5 * (std::pow(t, two_h) + std::pow(s, two_h) -
                std::pow(std::abs(t - s), two_h));
}

double last_cell_weight(const KernelSpec& spec, double t, double width) {
  const double mid = t - 0.5 * width;
  const auto parts = kernel_parts(spec, t, mid);
  if (spec.regime != Regime::BelowHalf) return parts.regular * width;
  const double e = spec.hurst + 0.5;
  return parts.singular * std::pow(width, e) / e + parts.regular * width;
}

double last_cell_rms(const KernelSpec& spec, double t, double width) {
  const double mid = t - 0.5 * width;
  const auto parts = kernel_parts(spec, t, mid);
  if (spec.regime != Regime::BelowHalf) return parts.regular;
  // (S r^a + R)^2 integrated over r in (0, width) exactly in the singular
  // powers, smooth coefficients frozen at the midpoint.
  const double h = spec.hurst;
  const double sq = parts.singular * parts.singular * std::pow(width, 2.0 * h) / (2.0 * h) +
                    2.0 * parts.singular * parts.regular * std::pow(width, h + 0.5) / (h + 0.5) +
                    parts.regular * parts.regular * width;
  return std::sqrt(sq / width);
}

QuadratureRule kernel_weights(const KernelSpec& spec, double t,
                              const TimeGrid& grid) {
  const std::size_t last = grid.index_of(t);
  if (last == 0) throw InvalidArgument("kernel_weights needs t > 0");
  const double end = grid[last];
  QuadratureRule rule;
  rule.target_time = end;
  rule.nodes.resize(last);
  rule.weights.resize(last);
  for (std::size_t j = 0; j < last; ++j) {
    rule.nodes[j] = grid.midpoint(j);
    if (j + 1 == last) {
      rule.weights[j] = last_cell_weight(spec, end, grid.width(j));
    } else if (spec.regime == Regime::Standard) {
      rule.weights[j] = grid.width(j);
    } else {
      rule.weights[j] = kernel_value(spec, end, rule.nodes[j]) * grid.width(j);
    }
  }
  return rule;
}

double verify_covariance_identity(const KernelSpec& spec, double s, double t,
                                  int n) {
  if (spec.regime == Regime::Standard) {
    throw InvalidArgument("covariance identity check needs H != 1/2");
  }
  if (!(s > 0.0) || !(t > 0.0) || n < 16) {
    throw InvalidArgument("covariance identity check needs s, t > 0 and n >= 16");
  }
  const double lo = std::min(s, t);
  const double hi = std::max(s, t);
  const bool diagonal = std::abs(hi - lo) <= 1e-14 * hi;
  const double width = lo / n;
  double sum = 0.0;
  for (int j = 0; j + 1 < n; ++j) {
    const double u = (j + 0.5) * width;
    sum += kernel_value(spec, hi, u) * kernel_value(spec, lo, u) * width;
  }
  const double mid = lo - 0.5 * width;
  if (diagonal) {
    const double rms = last_cell_rms(spec, lo, width);
    sum += rms * rms * width;
  } else {
    sum += kernel_value(spec, hi, mid) * last_cell_weight(spec, lo, width);
  }
  const double exact = fbm_covariance(spec.hurst, s, t);
  return std::abs(sum - exact) / exact;
}

}  // namespace fraclangevin

namespace fraclangevin {

VolterraOperator::VolterraOperator(KernelSpec spec, TimeGrid grid)
    : spec_(spec), grid_(std::move(grid)), last_weight_(grid_.size(), 0.0) {
  packed_.reserve(grid_.size() * grid_.cells() / 2);
  for_each_kernel_row(spec_, grid_,
                      [this](std::size_t i, std::span<const double> row, double last) {
                        packed_.insert(packed_.end(), row.begin(), row.end());
                        last_weight_[i] = last;
                      });
}

std::vector<double> VolterraOperator::integrate(
    std::span<const double> cell_values) const {
  if (cell_values.size() != grid_.cells()) {
    throw InvalidArgument("integrate needs one value per grid cell");
  }
  std::vector<double> out(grid_.size(), 0.0);
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    const auto row = kernel_row(i);
    double sum = 0.0;
    for (std::size_t j = 0; j + 1 < i; ++j) {
      sum += row[j] * grid_.width(j) * cell_values[j];
    }
    out[i] = sum + last_weight_[i] * cell_values[i - 1];
  }
  return out;
}

std::vector<double> VolterraOperator::stochastic_integral(
    std::span<const double> cell_increments) const {
  if (cell_increments.size() != grid_.cells()) {
    throw InvalidArgument("stochastic_integral needs one increment per grid cell");
  }
  std::vector<double> out(grid_.size(), 0.0);
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    const auto row = kernel_row(i);
    double sum = 0.0;
    for (std::size_t j = 0; j < i; ++j) sum += row[j] * cell_increments[j];
    out[i] = sum;
  }
  return out;
}

std::vector<double> midpoint_values(const Path& path) {
  std::vector<double> out(path.grid().cells());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = path.at_midpoint(j);
  return out;
}

}  // namespace fraclangevin
