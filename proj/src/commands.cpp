#include "fraclangevin/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "fraclangevin/csv.hpp"
#include "fraclangevin/errors.hpp"
#include "fraclangevin/fbm.hpp"
#include "fraclangevin/fractional.hpp"
#include "fraclangevin/hurst.hpp"
#include "fraclangevin/langevin.hpp"
#include "fraclangevin/noise.hpp"
#include "fraclangevin/stats.hpp"

namespace fraclangevin::cli {

namespace {

using nlohmann::json;

void emit_table(const std::string& target, const CsvTable& table, std::ostream& out) {
  if (target.empty() || target == "-") {
    write_csv(out, table);
  } else {
    write_csv_file(target, table);
  }
}

void emit_json(const std::string& target, const json& doc) {
  if (target.empty()) return;
  std::ofstream file(target);
  if (!file) throw std::runtime_error("cannot open '" + target + "' for writing");
  file << doc.dump(2) << '\n';
}

std::uint64_t require_seed(const std::optional<std::uint64_t>& seed) {
  if (!seed) throw InvalidArgument("--seed is required for simulation commands");
  return *seed;
}

std::vector<double> grid_column(const TimeGrid& grid) {
  return {grid.points().begin(), grid.points().end()};
}

// Columns of a table other than the time column "t".
std::vector<std::size_t> data_columns(const CsvTable& table) {
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (table.header[c] != "t") cols.push_back(c);
  }
  return cols;
}

std::size_t pick_column(const CsvTable& table, const std::string& preferred,
                        const std::string& source) {
  const int idx = table.find(preferred);
  if (idx >= 0) return static_cast<std::size_t>(idx);
  const auto cols = data_columns(table);
  if (cols.size() != 1) {
    throw ParseError(source + ": expected a column named '" + preferred +
                     "' or a single data column");
  }
  return cols.front();
}

Path path_from(const CsvTable& table, std::size_t column, const std::string& source) {
  const int t = table.find("t");
  if (t < 0) throw ParseError(source + ": missing 't' column");
  return Path(TimeGrid(table.columns[static_cast<std::size_t>(t)]), table.columns[column]);
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace

int simulate_fbm(const SimulateFbmOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto seed = require_seed(opts.seed);
    if (opts.paths == 0) throw InvalidArgument("--paths must be at least 1");
    if (opts.method != "exact" && opts.method != "kernel") {
      throw InvalidArgument("--method must be 'exact' or 'kernel'");
    }
    const auto spec = make_kernel_spec(opts.hurst);
    const auto grid = uniform_grid(opts.horizon, opts.steps);

    CsvTable table;
    table.header.push_back("t");
    table.columns.push_back(grid_column(grid));
    std::vector<double> terminal;
    terminal.reserve(opts.paths);
    auto collect = [&](const Path& p, std::size_t k) {
      table.header.push_back("path_" + std::to_string(k + 1));
      table.columns.emplace_back(p.values().begin(), p.values().end());
      terminal.push_back(p.values().back());
    };
    if (opts.method == "exact") {
      const ExactFbmSampler sampler(opts.hurst, grid);
      for (std::size_t k = 0; k < opts.paths; ++k) collect(sampler.sample({seed, k}), k);
    } else {
      const KernelFbmSampler sampler(spec, grid);
      for (std::size_t k = 0; k < opts.paths; ++k) collect(sampler.sample({seed, k}), k);
    }
    emit_table(opts.out, table, out);

    if (opts.report == "variance") {
      if (opts.paths < 2) throw InvalidArgument("--report variance needs --paths >= 2");
      const double var = sample_variance(terminal);
      const double expected = std::pow(opts.horizon, 2.0 * opts.hurst);
      const double se = expected * std::sqrt(2.0 / static_cast<double>(opts.paths - 1));
      std::ostream& rep = (opts.out.empty() || opts.out == "-") ? err : out;
      rep << "variance_at_horizon=" << format_double(var)
          << " expected=" << format_double(expected)
          << " standard_error=" << format_double(se)
          << " z=" << format_double((var - expected) / se) << '\n';
    } else if (!opts.report.empty()) {
      throw InvalidArgument("unknown --report '" + opts.report + "' (expected 'variance')");
    }
    return static_cast<int>(kOk);
  });
}

int simulate_velocity(const SimulateVelocityOptions& opts, std::ostream& out,
                      std::ostream& err) {
  return guarded(err, [&] {
    const auto seed = require_seed(opts.seed);
    LangevinParams params{opts.mass, opts.friction, opts.sigma, opts.v0, 0.0};
    params.validate();
    const auto spec = make_kernel_spec(opts.hurst);
    const auto grid = uniform_grid(opts.horizon, opts.steps);
    const auto v = simulate_ou_exact(params, grid, {seed, 0});

    CsvTable table;
    table.header = {"t", "V"};
    table.columns.push_back(grid_column(grid));
    table.columns.emplace_back(v.values().begin(), v.values().end());
    if (spec.regime != Regime::Standard) {
      const auto fv = fractional_velocity(FractionalConfig{spec, opts.a_h}, v);
      table.header.push_back("V_H");
      table.columns.emplace_back(fv.transformed.values().begin(),
                                 fv.transformed.values().end());
    } else {
      err << "note: H = 1/2, only the standard velocity is written\n";
    }
    emit_table(opts.out, table, out);
    return static_cast<int>(kOk);
  });
}

int estimate_hurst(const EstimateHurstOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto table = read_csv_file(opts.input);
    const auto cols = data_columns(table);
    if (cols.empty()) throw ParseError(opts.input + ": no data column");
    json report;
    report["series"] = opts.increments ? "increments" : "raw";
    report["t_min"] = opts.t_min;
    out << "series=" << (opts.increments ? "increments" : "raw") << '\n';
    double sum_h = 0.0;
    for (std::size_t c : cols) {
      std::vector<double> series = table.columns[c];
      if (opts.increments) {
        std::vector<double> diff;
        for (std::size_t i = 1; i < series.size(); ++i) diff.push_back(series[i] - series[i - 1]);
        series = std::move(diff);
      }
      const auto est = fraclangevin::estimate_hurst(series, opts.t_min);
      out << "column=" << table.header[c] << " H=" << format_double(est.hurst)
          << " lambda=" << format_double(est.lambda)
          << " r_squared=" << format_double(est.r_squared)
          << " points_used=" << est.points_used << '\n';
      report["estimates"].push_back({{"column", table.header[c]},
                                     {"H", est.hurst},
                                     {"lambda", est.lambda},
                                     {"r_squared", est.r_squared},
                                     {"points_used", est.points_used}});
      sum_h += est.hurst;
    }
    if (cols.size() > 1) {
      const double mean_h = sum_h / static_cast<double>(cols.size());
      out << "mean_H=" << format_double(mean_h) << " columns=" << cols.size() << '\n';
      report["mean_H"] = mean_h;
    }
    emit_json(opts.out, report);
    return static_cast<int>(kOk);
  });
}

int estimate_ah(const EstimateAhOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto spec = make_kernel_spec(opts.hurst);
    const auto obs_table = read_csv_file(opts.observed);
    const auto vel_table = read_csv_file(opts.velocity);
    const int obs_t = obs_table.find("t");
    const int vel_t = vel_table.find("t");
    if (obs_t < 0) throw ParseError(opts.observed + ": missing 't' column");
    if (vel_t < 0) throw ParseError(opts.velocity + ": missing 't' column");
    const auto& ta = obs_table.columns[static_cast<std::size_t>(obs_t)];
    const auto& tb = vel_table.columns[static_cast<std::size_t>(vel_t)];
    for (std::size_t r = 0; r < std::max(ta.size(), tb.size()); ++r) {
      if (r >= ta.size() || r >= tb.size() || std::abs(ta[r] - tb[r]) > 1e-12) {
        throw InvalidArgument("time grids differ at data row " + std::to_string(r + 1));
      }
    }
    const auto observed =
        path_from(obs_table, pick_column(obs_table, "V_H", opts.observed), opts.observed);
    const auto velocity =
        Path(observed.grid(), vel_table.columns[pick_column(vel_table, "V", opts.velocity)]);
    const auto est = fraclangevin::estimate_ah(spec, observed, velocity);
    out << "A_H=" << format_double(est.value) << '\n';
    json report;
    report["A_H"] = est.value;
    for (std::size_t i = 0; i < est.times.size(); ++i) {
      out << "t=" << format_double(est.times[i]) << " ratio=" << format_double(est.ratios[i])
          << '\n';
      report["ratios"].push_back({{"t", est.times[i]}, {"ratio", est.ratios[i]}});
    }
    emit_json(opts.out, report);
    return static_cast<int>(kOk);
  });
}

namespace {

struct CheckResult {
  std::string name;
  double value;
  double threshold;
  bool passed;
};

CheckResult check_covariance() {
  // Worst ratio residual / tolerance over both regimes.
  double worst = 0.0;
  for (double h : {0.3, 0.7}) {
    const auto spec = make_kernel_spec(h);
    const double tol = h > 0.5 ? 1e-2 : 2e-2;
    for (auto [s, t] : {std::pair{1.0, 1.0}, {0.5, 1.0}, {1.0, 2.0}}) {
      worst = std::max(worst, verify_covariance_identity(spec, s, t, 4096) / tol);
    }
  }
  return {"covariance", worst, 1.0, worst <= 1.0};
}

CheckResult check_qv(const ValidateOptions& opts) {
  const auto grid = uniform_grid(opts.horizon, opts.steps);
  const double qv = quadratic_variation(brownian_path(grid, {opts.seed, 0}));
  const double tol = std::max(0.025 * opts.horizon,
                              5.0 * opts.horizon * std::sqrt(2.0 / static_cast<double>(opts.steps)));
  return {"qv", std::abs(qv - opts.horizon), tol, std::abs(qv - opts.horizon) <= tol};
}

CheckResult check_donsker(const ValidateOptions& opts) {
  std::vector<double> samples;
  samples.reserve(2000);
  for (std::uint64_t k = 0; k < 2000; ++k) {
    const auto path = donsker_path(10000, 1.0, {StepKind::Rademacher, 1.0}, {opts.seed, k});
    samples.push_back(path.values().back());
  }
  const double ks = ks_distance_normal(std::move(samples));
  return {"donsker", ks, 0.05, ks <= 0.05};
}

CheckResult check_residual(const ValidateOptions& opts) {
  const auto spec = make_kernel_spec(0.7);
  const LangevinParams params{1.0, 2.0, 0.5, 1.0, 0.0};
  const auto grid = uniform_grid(1.0, 4096);
  const auto db = gaussian_increments(grid, {opts.seed, 0});
  const auto v = simulate_ou_em(params, grid, db);
  const double r = transformed_langevin_residual(spec, params, v, db).normalized;
  return {"residual", r, 0.05, r <= 0.05};
}

}  // namespace

int validate(const ValidateOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::vector<std::string> all = {"covariance", "qv", "donsker", "residual"};
    const auto& requested = opts.checks.empty() ? all : opts.checks;
    json summary;
    bool ok = true;
    for (const auto& name : requested) {
      CheckResult r;
      if (name == "covariance") {
        r = check_covariance();
      } else if (name == "qv") {
        r = check_qv(opts);
      } else if (name == "donsker") {
        r = check_donsker(opts);
      } else if (name == "residual") {
        r = check_residual(opts);
      } else {
        throw InvalidArgument("unknown check '" + name +
                              "' (expected covariance, qv, donsker or residual)");
      }
      ok = ok && r.passed;
      out << (r.passed ? "PASS " : "FAIL ") << r.name << " value=" << format_double(r.value)
          << " threshold=" << format_double(r.threshold) << '\n';
      summary["checks"].push_back(
          {{"name", r.name}, {"value", r.value}, {"threshold", r.threshold}, {"passed", r.passed}});
    }
    summary["passed"] = ok;
    out << summary.dump() << '\n';
    return static_cast<int>(ok ? kOk : kCheckFailed);
  });
}

}  // namespace fraclangevin::cli
