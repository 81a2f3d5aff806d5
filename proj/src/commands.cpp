#include "itguide/commands.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "itguide/errors.hpp"
#include "itguide/io.hpp"

namespace itguide {

int exit_code(RunStatus status) {
    switch (status) {
    case RunStatus::Intercepted:
        return kExitIntercepted;
    case RunStatus::Timeout:
        return kExitTimeout;
    case RunStatus::GuardTripped:
        return kExitGuardTripped;
    }
    return kExitError;
}

RunReport run_config(const ScenarioConfig &config) {
    const Scenario scenario = config.scenario();
    const GuidanceConfig guidance = config.guidance();
    RunReport report;
    report.result = run_scenario(scenario, guidance, config.sim_settings());
    report.metrics = interception_metrics(report.result, scenario, guidance);
    return report;
}

namespace {

void print_summary(std::ostream &out, const std::string &label, const RunReport &r) {
    out << label << ": " << to_string(r.metrics.status)
        << " t=" << r.metrics.impact_time << " s miss=" << r.metrics.miss_distance
        << " m effort=" << r.metrics.control_effort << '\n';
    if (r.result.infeasible_shaping)
        out << label << ": warning: desired impact time is shorter than the "
                        "straight-line flight time\n";
    if (!r.result.outcome.message.empty())
        out << label << ": " << r.result.outcome.message << '\n';
}

} // namespace

int run_command(const RunOptions &options, std::ostream &out, std::ostream &err) {
    try {
        ScenarioConfig config = load_config(options.config_path, options.preset);
        if (options.dt) {
            config.dt = *options.dt;
            config.validate();
        }
        const RunReport report = run_config(config);
        write_trajectory_csv(options.out_traj, report.result.log);
        write_metrics_json(options.out_metrics, report.metrics, {},
                           report.result.infeasible_shaping,
                           report.result.outcome.message);
        print_summary(out, options.preset.value_or("run"), report);
        return exit_code(report.metrics.status);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

int batch_command(const BatchOptions &options, std::ostream &out, std::ostream &err) {
    std::vector<LabeledConfig> scenarios;
    try {
        if (options.preset) {
            scenarios = preset_scenarios(*options.preset);
            for (auto &s : scenarios) {
                if (options.config_path)
                    s.config = load_config_file(*options.config_path, s.config);
                apply_env_overrides(s.config);
            }
        } else if (options.sweep) {
            ScenarioConfig base;
            if (options.config_path)
                base = load_config_file(*options.config_path, base);
            apply_env_overrides(base);
            scenarios.push_back({"", base});
        }
        if (options.sweep) {
            std::vector<LabeledConfig> swept;
            for (const auto &b : scenarios)
                for (auto &s : sweep_scenarios(b.config, *options.sweep)) {
                    if (!b.label.empty())
                        s.label = b.label + "_" + s.label;
                    swept.push_back(std::move(s));
                }
            scenarios = std::move(swept);
        }
        if (scenarios.empty())
            throw std::invalid_argument("batch needs --preset or --sweep");
        for (const auto &s : scenarios) {
            try {
                s.config.validate();
            } catch (const ValidationError &e) {
                throw ValidationError(s.label + ": " + e.what());
            }
        }
        std::filesystem::create_directories(options.out_dir);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }

    const std::size_t count = scenarios.size();
    std::vector<RunReport> reports(count);
    std::vector<std::string> failures(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            const auto &s = scenarios[i];
            const std::filesystem::path dir(options.out_dir);
            try {
                reports[i] = run_config(s.config);
                write_trajectory_csv((dir / (s.label + ".csv")).string(),
                                     reports[i].result.log);
                write_metrics_json((dir / (s.label + ".json")).string(),
                                   reports[i].metrics, s.label,
                                   reports[i].result.infeasible_shaping,
                                   reports[i].result.outcome.message);
            } catch (const std::exception &e) {
                failures[i] = e.what();
            }
        }
    };
    unsigned jobs = options.jobs ? options.jobs : std::thread::hardware_concurrency();
    jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(count));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto &t : pool)
        t.join();

    int code = kExitIntercepted;
    std::vector<LabeledMetrics> labeled;
    for (std::size_t i = 0; i < count; ++i) {
        if (!failures[i].empty()) {
            err << scenarios[i].label << ": error: " << failures[i] << '\n';
            code = std::max(code, kExitError);
            continue;
        }
        print_summary(out, scenarios[i].label, reports[i]);
        code = std::max(code, exit_code(reports[i].metrics.status));
        labeled.push_back({scenarios[i].label, reports[i].metrics});
    }
    if (!labeled.empty()) {
        const std::string path =
            (std::filesystem::path(options.out_dir) / "report.csv").string();
        try {
            write_report_csv(path, compare_report(labeled));
        } catch (const std::exception &e) {
            err << "error: " << e.what() << '\n';
            code = std::max(code, kExitError);
        }
    }
    return code;
}

int validate_command(const std::string &config_path, std::ostream &out,
                     std::ostream &err) {
    try {
        const ScenarioConfig config = load_config(config_path);
        out << serialize_config(config);
        return 0;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

} // namespace itguide
