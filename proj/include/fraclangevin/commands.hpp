#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fraclangevin::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kUsage = 2,
  kCheckFailed = 3,
};

struct SimulateFbmOptions {
  double hurst = 0.5;
  std::string method = "kernel";  // exact | kernel
  double horizon = 1.0;
  std::size_t steps = 1024;
  std::size_t paths = 1;
  std::optional<std::uint64_t> seed;
  std::string out;     // empty or "-" writes to stdout
  std::string report;  // "" or "variance"
};

struct SimulateVelocityOptions {
  double hurst = 0.7;
  double a_h = 1.0;
  double mass = 1.0;
  double friction = 1.0;
  double sigma = 1.0;
  double v0 = 1.0;
  double horizon = 1.0;
  std::size_t steps = 1024;
  std::optional<std::uint64_t> seed;
  std::string out;
};

struct EstimateHurstOptions {
  std::string input;
  std::size_t t_min = 16;
  bool increments = false;
  std::string out;  // optional JSON report
};

struct EstimateAhOptions {
  double hurst = 0.7;
  std::string observed;
  std::string velocity;
  std::string out;  // optional JSON report
};

struct ValidateOptions {
  std::vector<std::string> checks;  // empty: all
  std::size_t steps = 100000;       // quadratic-variation path length
  double horizon = 2.0;             // quadratic-variation horizon
  std::uint64_t seed = 1;
};

int simulate_fbm(const SimulateFbmOptions& opts, std::ostream& out, std::ostream& err);
int simulate_velocity(const SimulateVelocityOptions& opts, std::ostream& out, std::ostream& err);
int estimate_hurst(const EstimateHurstOptions& opts, std::ostream& out, std::ostream& err);
int estimate_ah(const EstimateAhOptions& opts, std::ostream& out, std::ostream& err);
int validate(const ValidateOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11, optional --config JSON per subcommand, flags win)
/// and dispatches. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fraclangevin::cli
