#include "itguide/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace itguide {

double control_effort(const TrajectoryLog &log) {
    double total = 0.0;
    const auto &rows = log.rows;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const LogRow &a = rows[i - 1];
        const LogRow &b = rows[i];
        const double fa = a.a_my * a.a_my + a.a_mz * a.a_mz;
        const double fb = b.a_my * b.a_my + b.a_mz * b.a_mz;
        total += 0.5 * (fa + fb) * (b.t - a.t);
    }
    return total;
}

Metrics interception_metrics(const SimResult &result, const Scenario &scenario,
                             const GuidanceConfig &config) {
    Metrics m;
    m.status = result.outcome.status;
    m.miss_distance = result.outcome.miss_distance;
    m.impact_time = result.outcome.impact_time;
    m.impact_time_error = m.impact_time - scenario.tf;
    m.control_effort = control_effort(result.log);

    const auto &rows = result.log.rows;
    if (rows.empty())
        return m;
    m.initial_lead = rows.front().sigma;
    const double sigma_max = config.shaping.sigma_max;
    for (const LogRow &row : rows) {
        m.max_lead = std::max(m.max_lead, std::abs(row.sigma));
        m.max_ay = std::max(m.max_ay, std::abs(row.a_my));
        m.max_az = std::max(m.max_az, std::abs(row.a_mz));
        if (std::abs(row.sigma) > sigma_max + kViolationTolerance)
            ++m.fov_violations;
        if (std::abs(row.a_my) > row.a_y_max + kViolationTolerance ||
            std::abs(row.a_mz) > row.a_z_max + kViolationTolerance)
            ++m.accel_violations;
    }
    const LogRow &last = rows.back();
    m.terminal_lead = std::abs(last.sigma);
    m.terminal_ay = std::abs(last.a_my);
    m.terminal_az = std::abs(last.a_mz);
    return m;
}

std::vector<ComparisonRow> compare_report(std::span<const LabeledMetrics> runs) {
    if (runs.empty())
        throw std::invalid_argument("compare_report: no runs to compare");
    std::vector<ComparisonRow> out;
    out.reserve(runs.size());
    for (const LabeledMetrics &run : runs) {
        const Metrics &m = run.metrics;
        out.push_back({run.label, m.impact_time - m.impact_time_error, m.impact_time,
                       m.initial_lead * 180.0 / std::numbers::pi, m.control_effort});
    }
    return out;
}

} // namespace itguide
