#pragma once

#include <iosfwd>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "ptq/io.hpp"
#include "ptq/sensing.hpp"

namespace ptq::cli {

enum class Command { Spectrum, EpLocate, EpCurve, Concurrence, Evolve, Revivals, Qfi, Sense, Reproduce };
enum class Format { Csv, Json };

struct SweepSpec {
  Kappa axis = Kappa::J;
  double lo = 0.0;
  double hi = 0.0;
  std::size_t n = 2;
};

struct DynamicsSpec {
  double theta_init = std::numbers::pi / 2.0;  // |00>
  double t_max = 40.0;
  double dt = 1e-3;
  std::size_t stride = 0;  // 0 picks a stride that keeps at most 100000 rows
};

struct RunConfig {
  Command command = Command::Spectrum;
  std::string preset;  // reproduce only
  SystemParams params;
  std::optional<SweepSpec> sweep;
  DynamicsSpec dynamics;
  std::string out;  // empty writes to stdout
  Format format = Format::Csv;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

const std::vector<std::string>& preset_names();

/// Builds the dataset for a validated config. Throws ptq::Error.
io::Dataset build_dataset(const RunConfig& config);

/// Runs a config end to end, writing the dataset and mapping failures to
/// exit codes. Diagnostics go to err.
int run(const RunConfig& config, std::ostream& err);

/// Parses argv and runs. Returns the process exit code.
int main_entry(int argc, char** argv, std::ostream& err);

}  // namespace ptq::cli
