// CSV and JSON serialization of trajectory logs, metrics and reports.
#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "itguide/metrics.hpp"

namespace itguide {

/// Trajectory CSV columns in row order. Angles in radians, SI units.
const std::vector<std::string> &trajectory_columns();

void write_trajectory_csv(std::ostream &out, const TrajectoryLog &log);
/// Throws std::runtime_error with the path when the file cannot be written.
void write_trajectory_csv(const std::string &path, const TrajectoryLog &log);

/// Parses a CSV produced by write_trajectory_csv. The mode is not stored in
/// the file and is returned as ThreeD.
TrajectoryLog read_trajectory_csv(std::istream &in);
TrajectoryLog read_trajectory_csv(const std::string &path);

/// Metrics as a JSON object; lead angles also in degrees.
std::string metrics_json(const Metrics &metrics, const std::string &label = {},
                         bool infeasible_shaping = false,
                         const std::string &message = {});
void write_metrics_json(const std::string &path, const Metrics &metrics,
                        const std::string &label = {},
                        bool infeasible_shaping = false,
                        const std::string &message = {});

/// label,impact_time_desired_s,impact_time_s,initial_angle_deg,control_effort
void write_report_csv(std::ostream &out, std::span<const ComparisonRow> rows);
void write_report_csv(const std::string &path, std::span<const ComparisonRow> rows);

} // namespace itguide
