// Command implementations behind the itguide executable.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "itguide/config.hpp"
#include "itguide/metrics.hpp"

namespace itguide {

/// Process exit codes.
inline constexpr int kExitIntercepted = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitTimeout = 2;
inline constexpr int kExitGuardTripped = 3;

int exit_code(RunStatus status);

struct RunReport {
    SimResult result;
    Metrics metrics;
};

/// Simulates one validated configuration.
RunReport run_config(const ScenarioConfig &config);

struct RunOptions {
    std::optional<std::string> config_path;
    std::optional<std::string> preset;
    std::string out_traj;
    std::string out_metrics;
    std::optional<double> dt;
};

struct BatchOptions {
    std::optional<std::string> preset;
    std::optional<std::string> config_path;
    std::optional<std::string> sweep; // key=v1,v2,...
    std::string out_dir;
    unsigned jobs = 0;                // 0: hardware concurrency
};

/// Writes the trajectory CSV and metrics JSON; returns the status exit code,
/// or kExitError on configuration or I/O failure (reported on err).
int run_command(const RunOptions &options, std::ostream &out, std::ostream &err);

/// One CSV + JSON per scenario in out_dir plus report.csv. Scenarios run in
/// parallel; a failing scenario is reported and the batch continues. Returns 0
/// when every scenario intercepted, else the largest per-scenario exit code.
int batch_command(const BatchOptions &options, std::ostream &out, std::ostream &err);

/// Loads and validates; prints the resolved configuration on success.
int validate_command(const std::string &config_path, std::ostream &out,
                     std::ostream &err);

} // namespace itguide
