#include "itguide/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace itguide {

namespace {

using Column = double LogRow::*;

struct NumericColumn {
    const char *name;
    Column member;
};

constexpr NumericColumn kNumeric[] = {
    {"t", &LogRow::t},         {"r", &LogRow::r},
    {"theta", &LogRow::theta}, {"psi", &LogRow::psi},
    {"thetaM", &LogRow::theta_m}, {"psiM", &LogRow::psi_m},
    {"sigma", &LogRow::sigma}, {"aMy", &LogRow::a_my},
    {"aMz", &LogRow::a_mz},    {"by", &LogRow::by},
    {"bz", &LogRow::bz},       {"z1", &LogRow::z1},
    {"z2", &LogRow::z2},       {"z3", &LogRow::z3},
    {"z4", &LogRow::z4},       {"zy", &LogRow::zy},
    {"zz", &LogRow::zz},       {"aYMax", &LogRow::a_y_max},
    {"aZMax", &LogRow::a_z_max}, {"Vz", &LogRow::vz},
    {"Vy", &LogRow::vy},       {"x", &LogRow::x},
    {"y", &LogRow::y},         {"z", &LogRow::z},
};

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

void append_double(std::string &out, double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

std::ofstream open_for_write(const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error(path + ": cannot open for writing");
    return out;
}

void check_written(std::ofstream &out, const std::string &path) {
    out.flush();
    if (!out)
        throw std::runtime_error(path + ": write failed");
}

} // namespace

const std::vector<std::string> &trajectory_columns() {
    static const std::vector<std::string> cols = [] {
        std::vector<std::string> c;
        for (const auto &col : kNumeric)
            c.emplace_back(col.name);
        c.emplace_back("guarded");
        c.emplace_back("status");
        return c;
    }();
    return cols;
}

void write_trajectory_csv(std::ostream &out, const TrajectoryLog &log) {
    std::string line;
    const auto &cols = trajectory_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i)
            line += ',';
        line += cols[i];
    }
    line += '\n';
    out << line;
    for (const LogRow &row : log.rows) {
        line.clear();
        for (const auto &col : kNumeric) {
            append_double(line, row.*col.member);
            line += ',';
        }
        line += row.guarded ? '1' : '0';
        line += ',';
        line += std::to_string(row.status);
        line += '\n';
        out << line;
    }
}

void write_trajectory_csv(const std::string &path, const TrajectoryLog &log) {
    std::ofstream out = open_for_write(path);
    write_trajectory_csv(out, log);
    check_written(out, path);
}

TrajectoryLog read_trajectory_csv(std::istream &in) {
    TrajectoryLog log;
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("trajectory CSV: missing header");
    std::string expected;
    for (const auto &c : trajectory_columns())
        expected += (expected.empty() ? "" : ",") + c;
    if (line != expected)
        throw std::runtime_error("trajectory CSV: unexpected header '" + line + "'");
    const std::size_t ncols = trajectory_columns().size();
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            cells.push_back(cell);
        if (cells.size() != ncols)
            throw std::runtime_error("trajectory CSV line " + std::to_string(lineno) +
                                     ": expected " + std::to_string(ncols) + " fields");
        LogRow row;
        try {
            std::size_t i = 0;
            for (const auto &col : kNumeric)
                row.*col.member = std::stod(cells[i++]);
            row.guarded = std::stoi(cells[i++]) != 0;
            row.status = std::stoi(cells[i]);
        } catch (const std::exception &) {
            throw std::runtime_error("trajectory CSV line " + std::to_string(lineno) +
                                     ": malformed number");
        }
        log.rows.push_back(row);
    }
    return log;
}

TrajectoryLog read_trajectory_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error(path + ": cannot open for reading");
    try {
        return read_trajectory_csv(in);
    } catch (const std::runtime_error &e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::string metrics_json(const Metrics &m, const std::string &label,
                         bool infeasible_shaping, const std::string &message) {
    nlohmann::ordered_json j;
    if (!label.empty())
        j["label"] = label;
    j["status"] = to_string(m.status);
    j["missDistance"] = m.miss_distance;
    j["impactTime"] = m.impact_time;
    j["impactTimeError"] = m.impact_time_error;
    j["controlEffort"] = m.control_effort;
    j["initialLead"] = m.initial_lead;
    j["maxLead"] = m.max_lead;
    j["maxAy"] = m.max_ay;
    j["maxAz"] = m.max_az;
    j["terminalLead"] = m.terminal_lead;
    j["terminalAy"] = m.terminal_ay;
    j["terminalAz"] = m.terminal_az;
    j["fovViolations"] = m.fov_violations;
    j["accelViolations"] = m.accel_violations;
    j["initialLeadDeg"] = m.initial_lead * kRadToDeg;
    j["maxLeadDeg"] = m.max_lead * kRadToDeg;
    j["terminalLeadDeg"] = m.terminal_lead * kRadToDeg;
    j["infeasibleShaping"] = infeasible_shaping;
    if (!message.empty())
        j["message"] = message;
    return j.dump(2) + "\n";
}

void write_metrics_json(const std::string &path, const Metrics &metrics,
                        const std::string &label, bool infeasible_shaping,
                        const std::string &message) {
    std::ofstream out = open_for_write(path);
    out << metrics_json(metrics, label, infeasible_shaping, message);
    check_written(out, path);
}

void write_report_csv(std::ostream &out, std::span<const ComparisonRow> rows) {
    std::string line =
        "label,impact_time_desired_s,impact_time_s,initial_angle_deg,control_effort\n";
    for (const ComparisonRow &row : rows) {
        line += row.label;
        for (double v : {row.desired_impact_time, row.impact_time, row.initial_angle_deg,
                         row.control_effort}) {
            line += ',';
            append_double(line, v);
        }
        line += '\n';
    }
    out << line;
}

void write_report_csv(const std::string &path, std::span<const ComparisonRow> rows) {
    std::ofstream out = open_for_write(path);
    write_report_csv(out, rows);
    check_written(out, path);
}

} // namespace itguide
