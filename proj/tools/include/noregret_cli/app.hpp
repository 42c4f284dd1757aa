#pragma once

#include <ostream>

#include "noregret_cli/config.hpp"

namespace noregret::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitViolation = 2;

/// Runs one experiment, writing CSV to `csv` and diagnostics to `log`.
/// Returns kExitOk, or kExitViolation after the full CSV when a bound fails.
/// Configuration problems propagate as ConfigError or noregret::Error.
int run_experiment(const ExperimentConfig& config, std::ostream& csv, std::ostream& log);

/// Command-line entry point; never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace noregret::cli
