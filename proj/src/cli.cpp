#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fraclangevin/commands.hpp"

namespace fraclangevin::cli {

namespace {

/// Flat JSON object -> CLI11 config items: {"hurst": 0.7, "increments": true}.
/// Keys are routed to whichever subcommand was selected on the command line.
class JsonConfig : public CLI::Config {
 public:
  explicit JsonConfig(const CLI::App* app) : app_(app) {}

  std::string to_config(const CLI::App*, bool, bool, std::string) const override {
    return "{}";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json doc;
    try {
      input >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ConversionError(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw CLI::ConversionError("config file must hold a JSON object");
    std::vector<std::string> parents;
    for (const auto* sub : app_->get_subcommands()) parents.push_back(sub->get_name());
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : doc.items()) {
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(scalar_text(v));
      } else {
        item.inputs.push_back(scalar_text(value));
      }
      items.push_back(std::move(item));
    }
    return items;
  }

 private:
  const CLI::App* app_;

  static std::string scalar_text(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }
};

CLI::Validator open_unit_hurst() {
  return CLI::Validator(
      [](std::string& text) -> std::string {
        double h = 0.0;
        try {
          std::size_t used = 0;
          h = std::stod(text, &used);
          if (used != text.size()) return "Hurst index must be a number in (0,1)";
        } catch (const std::exception&) {
          return "Hurst index must be a number in (0,1)";
        }
        if (!(h > 0.0 && h < 1.0)) return "Hurst index must lie in the open interval (0,1)";
        return {};
      },
      "in (0,1)");
}

CLI::App* add_subcommand(CLI::App& app, const std::string& name, const std::string& help) {
  return app.add_subcommand(name, help);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional Langevin dynamics: simulation and estimation"};
  app.require_subcommand(1);
  app.fallthrough();
  app.config_formatter(std::make_shared<JsonConfig>(&app));
  app.set_config("--config", "", "JSON file with option values; flags override it");

  SimulateFbmOptions fbm;
  auto* sim_fbm = add_subcommand(app, "simulate-fbm", "Sample fBm paths to CSV");
  sim_fbm->add_option("--hurst", fbm.hurst, "Hurst index")->required()->check(open_unit_hurst());
  sim_fbm->add_option("--method", fbm.method, "exact (Cholesky) or kernel (Volterra)")
      ->check(CLI::IsMember({"exact", "kernel"}));
  sim_fbm->add_option("--horizon,--T", fbm.horizon, "Time horizon")->check(CLI::PositiveNumber);
  sim_fbm->add_option("--steps,--n", fbm.steps, "Number of grid cells")->check(CLI::PositiveNumber);
  sim_fbm->add_option("--paths", fbm.paths, "Number of paths")->check(CLI::PositiveNumber);
  sim_fbm->add_option("--seed", fbm.seed, "Random seed (required)");
  sim_fbm->add_option("--out", fbm.out, "Output CSV (default stdout)");
  sim_fbm->add_option("--report", fbm.report, "Print a summary: variance");

  SimulateVelocityOptions vel;
  auto* sim_vel = add_subcommand(app, "simulate-velocity",
                                 "Exact OU velocity and its fractional transform to CSV");
  sim_vel->add_option("--hurst", vel.hurst, "Hurst index")->check(open_unit_hurst());
  sim_vel->add_option("--ah", vel.a_h, "Amplitude A_H");
  sim_vel->add_option("--mass", vel.mass, "Mass m")->check(CLI::PositiveNumber);
  sim_vel->add_option("--friction", vel.friction, "Friction b")->check(CLI::PositiveNumber);
  sim_vel->add_option("--sigma", vel.sigma, "Noise intensity")->check(CLI::NonNegativeNumber);
  sim_vel->add_option("--v0", vel.v0, "Initial velocity");
  sim_vel->add_option("--horizon,--T", vel.horizon, "Time horizon")->check(CLI::PositiveNumber);
  sim_vel->add_option("--steps,--n", vel.steps, "Number of grid cells")->check(CLI::PositiveNumber);
  sim_vel->add_option("--seed", vel.seed, "Random seed (required)");
  sim_vel->add_option("--out", vel.out, "Output CSV (default stdout)");

  EstimateHurstOptions eh;
  auto* est_h = add_subcommand(app, "estimate-hurst", "R/S estimate of H from a CSV column");
  est_h->add_option("input", eh.input, "Input CSV")->required();
  est_h->add_option("--t-min", eh.t_min, "Smallest prefix length in the regression")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  est_h->add_flag("--increments", eh.increments, "Difference each column before R/S");
  est_h->add_option("--out", eh.out, "Write a JSON report");

  EstimateAhOptions ea;
  auto* est_a = add_subcommand(app, "estimate-ah", "Estimate A_H from observed V^H and V");
  est_a->add_option("--hurst", ea.hurst, "Hurst index")->required()->check(open_unit_hurst());
  est_a->add_option("observed", ea.observed, "CSV with t and V_H")->required();
  est_a->add_option("velocity", ea.velocity, "CSV with t and V")->required();
  est_a->add_option("--out", ea.out, "Write a JSON report");

  ValidateOptions val;
  auto* validate_cmd = add_subcommand(app, "validate", "Run the built-in diagnostic checks");
  validate_cmd->add_option("--check", val.checks, "covariance, qv, donsker, residual");
  validate_cmd->add_option("--steps,--n", val.steps, "Quadratic-variation path length")
      ->check(CLI::PositiveNumber);
  validate_cmd->add_option("--horizon,--T", val.horizon, "Quadratic-variation horizon")
      ->check(CLI::PositiveNumber);
  validate_cmd->add_option("--seed", val.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? static_cast<int>(kOk) : static_cast<int>(kUsage);
  }

  if (*sim_fbm) return simulate_fbm(fbm, out, err);
  if (*sim_vel) return simulate_velocity(vel, out, err);
  if (*est_h) return estimate_hurst(eh, out, err);
  if (*est_a) return estimate_ah(ea, out, err);
  return validate(val, out, err);
}

}  // namespace fraclangevin::cli
