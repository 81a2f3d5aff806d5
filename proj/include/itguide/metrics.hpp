#pragma once

#include <span>
#include <string>
#include <vector>

#include "itguide/sim.hpp"

namespace itguide {

inline constexpr double kViolationTolerance = 1e-9;

struct Metrics {
    RunStatus status = RunStatus::Timeout;
    double miss_distance = 0.0;
    double impact_time = 0.0;
    double impact_time_error = 0.0; // impact_time - tf
    double control_effort = 0.0;    // [m^2/s^3]
    double initial_lead = 0.0;
    double max_lead = 0.0;
    double max_ay = 0.0;
    double max_az = 0.0;
    double terminal_lead = 0.0;
    double terminal_ay = 0.0;
    double terminal_az = 0.0;
    int fov_violations = 0;
    int accel_violations = 0;
};

/// Trapezoidal integral of a_My^2 + a_Mz^2 over the logged rows.
double control_effort(const TrajectoryLog &log);

Metrics interception_metrics(const SimResult &result, const Scenario &scenario,
                             const GuidanceConfig &config);

struct LabeledMetrics {
    std::string label;
    Metrics metrics;
};

struct ComparisonRow {
    std::string label;
    double desired_impact_time = 0.0;
    double impact_time = 0.0;
    double initial_angle_deg = 0.0;
    double control_effort = 0.0;
};

/// One row per run in input order. Throws std::invalid_argument when empty.
std::vector<ComparisonRow> compare_report(std::span<const LabeledMetrics> runs);

} // namespace itguide
