#include <cmath>
#include <vector>

#include "doctest.h"
#include "fraclangevin/errors.hpp"
#include "fraclangevin/fbm.hpp"
#include "fraclangevin/hurst.hpp"
#include "fraclangevin/rng.hpp"
#include "fraclangevin/stats.hpp"

using namespace fraclangevin;

TEST_CASE("rs_series hand example") {
  const std::vector<double> x{1.0, -1.0, 1.0, -1.0};
  const auto rs = rs_series(x);
  REQUIRE(rs.entries.size() == 3);
  CHECK(rs.entries[0].t == 2);
  CHECK(rs.entries[0].rs == doctest::Approx(1.0));
  CHECK(rs.entries[2].t == 4);
  CHECK(rs.entries[2].rs == doctest::Approx(1.0));
  // t = 3: Z = (1, 0, 1), R = 1, S = sqrt(8/9).
  CHECK(rs.entries[1].rs == doctest::Approx(1.0 / std::sqrt(8.0 / 9.0)));
}

TEST_CASE("rs_series rejects degenerate input") {
  CHECK_THROWS_AS(rs_series(std::vector<double>{5.0, 5.0, 5.0}), DegenerateSeries);
  CHECK_THROWS_AS(rs_series(std::vector<double>{1.0}), InvalidArgument);
}

TEST_CASE("property: R_t is nonnegative and nondecreasing") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Generator gen({seed, 9});
    const std::size_t n = 2 + static_cast<std::size_t>(gen.uniform() * 300);
    std::vector<double> x(n);
    for (double& v : x) v = gen.uniform() < 0.2 ? 1.0 : gen.normal();
    const auto rs = rs_series(x);
    // Recover R_t from rs and the prefix standard deviation.
    double previous = 0.0;
    for (const auto& e : rs.entries) {
      CHECK(std::isfinite(e.rs));
      CHECK(e.rs >= 0.0);
      double m = 0.0;
      for (std::size_t i = 0; i < e.t; ++i) m += x[i];
      m /= static_cast<double>(e.t);
      double ss = 0.0;
      for (std::size_t i = 0; i < e.t; ++i) ss += (x[i] - m) * (x[i] - m);
      const double r = e.rs * std::sqrt(ss / static_cast<double>(e.t));
      CHECK(r >= previous * (1.0 - 1e-12));
      previous = r;
    }
  }
}

TEST_CASE("loglog_regression examples") {
  std::vector<RSEntry> exact;
  for (std::size_t t = 2; t <= 64; t *= 2) exact.push_back({t, 2.0 * std::pow(t, 0.6)});
  const auto fit = loglog_regression(exact);
  CHECK(fit.slope == doctest::Approx(0.6).epsilon(1e-13));
  CHECK(fit.intercept == doctest::Approx(std::log(2.0)).epsilon(1e-13));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-13));

  const std::vector<RSEntry> two{{3, 1.7}, {11, 0.4}};
  CHECK(loglog_regression(two).r_squared == doctest::Approx(1.0).epsilon(1e-14));

  std::vector<RSEntry> wobble;
  double sign = 1.0;
  for (std::size_t t = 2; t <= 200; ++t, sign = -sign) {
    wobble.push_back({t, std::pow(t, 0.6) * (1.0 + 0.01 * sign)});
  }
  CHECK(std::abs(loglog_regression(wobble).slope - 0.6) <= 0.02);

  CHECK_THROWS_AS(loglog_regression(std::vector<RSEntry>{{2, 1.0}}), InvalidArgument);
  CHECK_THROWS_AS(loglog_regression(std::vector<RSEntry>{{2, 1.0}, {3, 0.0}}), InvalidArgument);
  CHECK_THROWS_AS(loglog_regression(std::vector<RSEntry>{{0, 1.0}, {3, 1.0}}), InvalidArgument);
}

TEST_CASE("estimate_hurst arguments") {
  const std::vector<double> x{1.0, -1.0, 1.0, -1.0, 2.0};
  CHECK_THROWS_AS(estimate_hurst(x, 1), InvalidArgument);
  CHECK_THROWS_AS(estimate_hurst(x, 16), InvalidArgument);
  const auto est = estimate_hurst(x, 2);
  CHECK(est.points_used == 4);
  CHECK(est.lambda > 0.0);
}

TEST_CASE("alternating partial sums look anti-persistent") {
  std::vector<double> z;
  double acc = 0.0;
  for (int i = 0; i < 1024; ++i) {
    acc += i % 2 == 0 ? 1.0 : -1.0;
    z.push_back(acc);
  }
  CHECK(estimate_hurst(z).hurst < 0.1);
}

TEST_CASE("affine invariance") {
  const auto g = uniform_grid(1.0, 1024);
  const ExactFbmSampler sampler(0.7, g);
  const auto raw = increments(sampler.sample({5, 0}));
  const auto base = estimate_hurst(raw);
  for (double a : {0.125, -4.0, 1024.0}) {
    for (double c : {0.0, 3.0, -0.5}) {
      std::vector<double> y(raw);
      for (double& v : y) v = a * v + c;
      const auto est = estimate_hurst(y);
      CAPTURE(a);
      CAPTURE(c);
      CHECK(est.hurst == doctest::Approx(base.hurst).epsilon(1e-12));
      CHECK(est.r_squared == doctest::Approx(base.r_squared).epsilon(1e-12));
      CHECK(est.lambda == doctest::Approx(base.lambda).epsilon(1e-11));
    }
  }
  // Dyadic data with power-of-two scales and dyadic shifts: no rounding at all.
  std::vector<double> dyadic(raw);
  for (double& v : dyadic) v = std::ldexp(std::round(std::ldexp(v, 24)), -24);
  const auto exact = estimate_hurst(dyadic);
  for (double a : {0.25, -2.0, 8.0}) {
    std::vector<double> y(dyadic);
    for (double& v : y) v = a * v + 0.75;
    const auto est = estimate_hurst(y);
    CHECK(est.hurst == exact.hurst);
    CHECK(est.r_squared == exact.r_squared);
    CHECK(est.lambda == exact.lambda);
  }
}

TEST_CASE("R/S on synthetic series") {
  const std::size_t n = 4096;
  const auto g = uniform_grid(1.0, n);
  std::vector<double> h7;
  std::vector<double> h3;
  std::vector<double> white;
  const ExactFbmSampler s7(0.7, g);
  const ExactFbmSampler s3(0.3, g);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    h7.push_back(estimate_hurst(increments(s7.sample({seed, 0}))).hurst);
    h3.push_back(estimate_hurst(increments(s3.sample({seed, 1}))).hurst);
    Generator gen({seed, 2});
    std::vector<double> w(n);
    for (double& v : w) v = gen.normal();
    white.push_back(estimate_hurst(w).hurst);
  }
  CHECK(std::abs(mean(h7) - 0.7) <= 0.1);
  CHECK(mean(h7) - mean(h3) >= 0.2);
  CHECK(mean(white) >= 0.45);
  CHECK(mean(white) <= 0.65);
}
