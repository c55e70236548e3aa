#ifndef STEKLOV_CLI_RUN_HPP
#define STEKLOV_CLI_RUN_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "steklov/steklov.hpp"

namespace steklov::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitInvariant = 3;

/// Dispatches the configured subcommand and writes its CSV files into out_dir.
/// Numerical errors propagate as steklov::Error; returns kExitInvariant when
/// a verify check fails.
int run(const RunConfig& config, const std::filesystem::path& out_dir, std::ostream& log);

struct CheckResult {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
  std::string message;  // set when the check threw
};

std::vector<CheckResult> run_verify_battery(const RunConfig& config);

// builders shared by the subcommands
ConformalMap build_map(const RunConfig& config, const BoundaryGrid& grid);
AnalyticFunction build_disk_generator(const GeneratorSpec& spec);
AnalyticFunction build_function(const SeriesSpec& spec);
BoundarySignal build_data(const DataSpec& spec, const BoundaryGrid& grid);

}  // namespace steklov::cli

#endif  // STEKLOV_CLI_RUN_HPP
