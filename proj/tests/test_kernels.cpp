#include <cmath>
#include <numeric>

#include "doctest.h"
#include "fraclangevin/errors.hpp"
#include "fraclangevin/grid.hpp"
#include "fraclangevin/kernels.hpp"
#include "fraclangevin/rng.hpp"
#include "oracles.hpp"

using namespace fraclangevin;

namespace {

// Frozen from the oracle at high precision.
constexpr double kIntK07 = 0.97258296612281299;
constexpr double kIntK03 = 0.97580344683686453;

double weight_sum(const QuadratureRule& rule) {
  return std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0);
}

}  // namespace

TEST_CASE("make_kernel_spec regimes and constants") {
  const auto above = make_kernel_spec(0.75);
  CHECK(above.regime == Regime::AboveHalf);
  CHECK(above.c_h == doctest::Approx(0.26741115875799758).epsilon(1e-13));
  const auto below = make_kernel_spec(0.25);
  CHECK(below.regime == Regime::BelowHalf);
  CHECK(below.c_h == doctest::Approx(0.64599800374075197).epsilon(1e-13));
  CHECK(make_kernel_spec(0.7).c_h == doctest::Approx(0.21836182617678247).epsilon(1e-13));
  CHECK(make_kernel_spec(0.3).c_h == doctest::Approx(0.73028293407992295).epsilon(1e-13));

  CHECK(make_kernel_spec(0.5).regime == Regime::Standard);
  CHECK(make_kernel_spec(0.5 + 5e-7).regime == Regime::Standard);
  CHECK(make_kernel_spec(0.5 + 2e-6).regime == Regime::AboveHalf);
  CHECK_THROWS_AS(make_kernel_spec(0.0), InvalidArgument);
  CHECK_THROWS_AS(make_kernel_spec(1.0), InvalidArgument);
  CHECK_THROWS_AS(make_kernel_spec(NAN), InvalidArgument);
}

TEST_CASE("c_H agrees with the Beta-integral oracle") {
  for (double h : {0.05, 0.25, 0.3, 0.45, 0.55, 0.7, 0.75, 0.95}) {
    CAPTURE(h);
    CHECK(make_kernel_spec(h).c_h == doctest::Approx(oracle::c_h(h)).epsilon(1e-10));
  }
}

TEST_CASE("kernel_value examples") {
  const auto std_spec = make_kernel_spec(0.5);
  CHECK(kernel_value(std_spec, 1.0, 0.3) == 1.0);
  CHECK(kernel_value(std_spec, 7.0, 6.999) == 1.0);

  CHECK(kernel_value(make_kernel_spec(0.75), 1.0, 0.5) ==
        doctest::Approx(0.93759196369805723).epsilon(1e-9));
  CHECK(kernel_value(make_kernel_spec(0.3), 1.0, 0.5) ==
        doctest::Approx(0.87301411433866804).epsilon(1e-9));
  CHECK(kernel_value(make_kernel_spec(0.25), 2.0, 0.3) ==
        doctest::Approx(0.70371886784987914).epsilon(1e-9));
  CHECK(kernel_value(make_kernel_spec(0.7), 2.0, 0.3) ==
        doctest::Approx(1.3429933869337197).epsilon(1e-9));

  const auto spec = make_kernel_spec(0.75);
  const double near = kernel_value(spec, 1.0, 1.0 - 1e-12);
  CHECK(near >= 0.0);
  CHECK(near < 1e-2);
  CHECK(kernel_value(spec, 1.0, 1.0 - 1e-12) < kernel_value(spec, 1.0, 1.0 - 1e-8));

  CHECK_THROWS_AS(kernel_value(spec, 1.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(kernel_value(spec, 1.0, 0.0), InvalidArgument);
}

TEST_CASE("property: kernel_value matches the quadrature oracle") {
  Generator gen({11, 0});
  for (int k = 0; k < 200; ++k) {
    const double h = 0.05 + 0.9 * gen.uniform();
    if (std::abs(h - 0.5) < 0.01) continue;
    const double t = 0.1 + 5.0 * gen.uniform();
    const double s = t * (0.001 + 0.998 * gen.uniform());
    const auto spec = make_kernel_spec(h);
    CAPTURE(h);
    CAPTURE(t);
    CAPTURE(s);
    CHECK(kernel_value(spec, t, s) ==
          doctest::Approx(oracle::kernel(h, t, s, spec.c_h)).epsilon(1e-8));
  }
}

TEST_CASE("property: nonnegative kernel above one half") {
  Generator gen({12, 0});
  for (int k = 0; k < 300; ++k) {
    const double h = 0.5 + 1e-5 + 0.49 * gen.uniform();
    const double t = 1e-3 + 10.0 * gen.uniform();
    const double s = t * gen.uniform();
    if (!(s > 0.0 && s < t)) continue;
    CHECK(kernel_value(make_kernel_spec(h), t, s) >= 0.0);
  }
}

TEST_CASE("kernel_dt examples and finite differences") {
  const auto spec = make_kernel_spec(0.75);
  const double hand = spec.c_h * std::pow(2.0, 0.25) * std::pow(0.5, -0.75);
  CHECK(kernel_dt(spec, 1.0, 0.5) == doctest::Approx(hand).epsilon(1e-14));
  CHECK(kernel_dt(spec, 1.0, 0.5) == doctest::Approx(0.53482231751599516).epsilon(1e-13));
  CHECK(kernel_dt(make_kernel_spec(0.5), 2.0, 1.0) == 0.0);

  Generator gen({13, 0});
  for (int k = 0; k < 100; ++k) {
    const double h = gen.uniform() < 0.5 ? 0.05 + 0.44 * gen.uniform() : 0.51 + 0.44 * gen.uniform();
    const auto sp = make_kernel_spec(h);
    const double t = 0.5 + 2.0 * gen.uniform();
    const double s = t * (0.05 + 0.75 * gen.uniform());
    const double d = 1e-4 * (t - s);
    const double fd = (kernel_value(sp, t + d, s) - kernel_value(sp, t - d, s)) / (2 * d);
    const double dt = kernel_dt(sp, t, s);
    CAPTURE(h);
    CHECK(fd == doctest::Approx(dt).epsilon(1e-3));
    if (h > 0.5) CHECK(dt > 0.0);
    if (h < 0.5) CHECK(dt < 0.0);
  }
}

TEST_CASE("fbm_covariance examples and properties") {
  CHECK(fbm_covariance(0.5, 1.0, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fbm_covariance(0.7, 1.0, 2.0) == doctest::Approx(std::pow(2.0, 0.4)).epsilon(1e-15));
  CHECK(fbm_covariance(0.7, 1.0, 2.0) == doctest::Approx(1.31951).epsilon(1e-5));
  CHECK(fbm_covariance(0.3, 0.0, 2.0) == 0.0);
  CHECK(fbm_covariance(0.3, 1.7, 1.7) == doctest::Approx(std::pow(1.7, 0.6)).epsilon(1e-15));
  CHECK_THROWS_AS(fbm_covariance(0.3, -1.0, 1.0), InvalidArgument);

  Generator gen({14, 0});
  for (int k = 0; k < 500; ++k) {
    const double h = 0.01 + 0.98 * gen.uniform();
    const double s = 5.0 * gen.uniform();
    const double t = 5.0 * gen.uniform();
    CHECK(fbm_covariance(h, s, t) == fbm_covariance(h, t, s));
    CHECK(fbm_covariance(h, t, t) == doctest::Approx(std::pow(t, 2 * h)).epsilon(1e-14).scale(1.0));
    // Powers of two keep the scaling free of rounding.
    const double a = std::ldexp(1.0, static_cast<int>(gen.uniform() * 8) - 4);
    const double scaled = fbm_covariance(h, a * s, a * t);
    CHECK(scaled == doctest::Approx(std::pow(a, 2 * h) * fbm_covariance(h, s, t)).epsilon(1e-13).scale(1.0));
  }
}

TEST_CASE("kernel_weights examples") {
  const auto g4 = uniform_grid(1.0, 4);
  const auto rule = kernel_weights(make_kernel_spec(0.5), 1.0, g4);
  REQUIRE(rule.weights.size() == 4);
  for (double w : rule.weights) CHECK(w == 0.25);
  CHECK(rule.nodes == std::vector<double>{0.125, 0.375, 0.625, 0.875});
  CHECK(rule.target_time == 1.0);

  const auto g = uniform_grid(1.0, 4096);
  CHECK(weight_sum(kernel_weights(make_kernel_spec(0.7), 1.0, g)) ==
        doctest::Approx(kIntK07).epsilon(1e-3));
  CHECK(weight_sum(kernel_weights(make_kernel_spec(0.3), 1.0, g)) ==
        doctest::Approx(kIntK03).epsilon(1e-3));

  const auto partial = kernel_weights(make_kernel_spec(0.3), 0.5, g4);
  CHECK(partial.weights.size() == 2);
  CHECK_THROWS_AS(kernel_weights(make_kernel_spec(0.3), 0.3, g4), InvalidArgument);
  CHECK_THROWS_AS(kernel_weights(make_kernel_spec(0.3), 0.0, g4), InvalidArgument);
}

TEST_CASE("kernel integral oracle reproduces the frozen values") {
  CHECK(oracle::kernel_integral(0.7, 1.0) == doctest::Approx(kIntK07).epsilon(1e-8));
  CHECK(oracle::kernel_integral(0.3, 1.0) == doctest::Approx(kIntK03).epsilon(1e-8));
}

TEST_CASE("scaled_inner_integral closed forms") {
  // q = 0: plain length; p = 1, q = 1: Y + Y^2/2; p = 2, q = -1: atan.
  CHECK(scaled_inner_integral(1.7, 0.0, 3.0) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(scaled_inner_integral(1.0, 1.0, 2.0) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(scaled_inner_integral(2.0, -1.0, 5.0) == doctest::Approx(std::atan(5.0)).epsilon(1e-10));
  CHECK(scaled_inner_integral(3.0, 0.5, 0.0) == 0.0);
}

TEST_CASE("verify_covariance_identity examples") {
  const auto s07 = make_kernel_spec(0.7);
  const double r1 = verify_covariance_identity(s07, 1.0, 1.0, 4096);
  CHECK(r1 <= 1e-2);
  CHECK(verify_covariance_identity(s07, 1.0, 1.0, 1024) > r1);

  const auto s03 = make_kernel_spec(0.3);
  const double r2 = verify_covariance_identity(s03, 0.5, 1.0, 4096);
  CHECK(r2 <= 2e-2);
  CHECK(verify_covariance_identity(s03, 0.5, 1.0, 1024) > r2);

  CHECK(verify_covariance_identity(s07, 2.0, 1.0, 512) ==
        verify_covariance_identity(s07, 1.0, 2.0, 512));
  CHECK_THROWS_AS(verify_covariance_identity(s07, 1.0, 1.0, 8), InvalidArgument);
  CHECK_THROWS_AS(verify_covariance_identity(make_kernel_spec(0.5), 1.0, 1.0, 64),
                  InvalidArgument);
}

TEST_CASE("VolterraOperator reproduces kernel_weights rows") {
  const auto spec = make_kernel_spec(0.3);
  const auto g = uniform_grid(2.0, 50);
  const VolterraOperator op(spec, g);
  std::vector<double> ones(g.cells(), 1.0);
  const auto integrals = op.integrate(ones);
  CHECK(integrals[0] == 0.0);
  for (std::size_t i = 1; i < g.size(); ++i) {
    const auto rule = kernel_weights(spec, g[i], g);
    REQUIRE(rule.weights.size() == i);
    CHECK(integrals[i] == doctest::Approx(weight_sum(rule)).epsilon(1e-13));
    const auto row = op.kernel_row(i);
    for (std::size_t j = 0; j + 1 < i; ++j) {
      CHECK(rule.weights[j] == doctest::Approx(row[j] * g.width(j)).epsilon(1e-14));
    }
    CHECK(rule.weights[i - 1] == doctest::Approx(op.last_weight(i)).epsilon(1e-14));
  }
  std::size_t visited = 0;
  for_each_kernel_row(spec, g, [&](std::size_t i, std::span<const double> row, double last) {
    ++visited;
    CHECK(row.size() == i);
    CHECK(last == op.last_weight(i));
    for (std::size_t j = 0; j < i; ++j) CHECK(row[j] == op.kernel_row(i)[j]);
  });
  CHECK(visited == g.cells());
}

TEST_CASE("last_cell_rms matches the mean square of the kernel") {
  using boost::math::quadrature::gauss_kronrod;
  for (double h : {0.25, 0.3, 0.45}) {
    const auto spec = make_kernel_spec(h);
    for (double width : {1.0 / 32, 1.0 / 1024}) {
      const double t = 1.0;
      // r = x^{1/2H} turns the r^{2H-1} singularity of K^2 into a bounded integrand.
      auto sq = [&](double x) {
        const double r = std::pow(x, 1.0 / (2 * h));
        const double k = oracle::kernel(h, t, t - r, spec.c_h);
        return k * k * r / (2 * h * x);
      };
      const double upper = std::pow(width, 2 * h);
      const double exact =
          std::sqrt(gauss_kronrod<double, 31>::integrate(sq, 0.0, upper, 10, 1e-12) / width);
      CAPTURE(h);
      CAPTURE(width);
      CHECK(last_cell_rms(spec, t, width) == doctest::Approx(exact).epsilon(1e-3));
    }
  }
  const auto above = make_kernel_spec(0.7);
  CHECK(last_cell_rms(above, 1.0, 0.25) == kernel_value(above, 1.0, 0.875));
  CHECK(last_cell_rms(make_kernel_spec(0.5), 1.0, 0.25) == 1.0);
}
