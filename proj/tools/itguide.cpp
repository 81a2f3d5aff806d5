#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "itguide/commands.hpp"
#include "itguide/config.hpp"

int main(int argc, char **argv) {
    CLI::App app{"Impact-time guidance simulator with seeker field-of-view and "
                 "actuator saturation limits"};
    app.require_subcommand(1);

    itguide::RunOptions run;
    std::string run_config, run_preset;
    double run_dt = 0.0;
    auto *run_cmd = app.add_subcommand("run", "Simulate one scenario");
    auto *run_config_opt =
        run_cmd->add_option("--config", run_config, "Configuration file")->check(CLI::ExistingFile);
    auto *run_preset_opt = run_cmd->add_option("--preset", run_preset,
                                               "Start from the first scenario of a preset");
    run_cmd->add_option("--out-traj", run.out_traj, "Trajectory CSV output")->required();
    run_cmd->add_option("--out-metrics", run.out_metrics, "Metrics JSON output")->required();
    auto *run_dt_opt = run_cmd->add_option("--dt", run_dt, "Integration step [s]")
                           ->check(CLI::PositiveNumber);

    itguide::BatchOptions batch;
    std::string batch_preset, batch_config, batch_sweep;
    auto *batch_cmd = app.add_subcommand("batch", "Simulate a scenario family");
    auto *batch_preset_opt = batch_cmd->add_option("--preset", batch_preset, "Preset name");
    auto *batch_config_opt =
        batch_cmd->add_option("--config", batch_config, "Keys applied to every scenario")
            ->check(CLI::ExistingFile);
    auto *batch_sweep_opt =
        batch_cmd->add_option("--sweep", batch_sweep, "Sweep one key: key=v1,v2,...");
    batch_cmd->add_option("--out-dir", batch.out_dir, "Output directory")->required();
    batch_cmd->add_option("--jobs", batch.jobs, "Parallel runs (0: all cores)");

    std::string validate_config;
    auto *validate_cmd = app.add_subcommand("validate", "Check a configuration file");
    validate_cmd->add_option("--config", validate_config, "Configuration file")->required();

    auto *presets_cmd = app.add_subcommand("presets", "List built-in presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : itguide::kExitError;
    }

    if (*run_cmd) {
        if (*run_config_opt)
            run.config_path = run_config;
        if (*run_preset_opt)
            run.preset = run_preset;
        if (*run_dt_opt)
            run.dt = run_dt;
        return itguide::run_command(run, std::cout, std::cerr);
    }
    if (*batch_cmd) {
        if (*batch_preset_opt)
            batch.preset = batch_preset;
        if (*batch_config_opt)
            batch.config_path = batch_config;
        if (*batch_sweep_opt)
            batch.sweep = batch_sweep;
        return itguide::batch_command(batch, std::cout, std::cerr);
    }
    if (*validate_cmd)
        return itguide::validate_command(validate_config, std::cout, std::cerr);
    if (*presets_cmd) {
        for (const auto &name : itguide::preset_names())
            std::cout << name << '\n';
        return 0;
    }
    return itguide::kExitError;
}
