// Scenario configuration: flat `section.key = value` text, presets, and
// conversion to the simulation structs.
#pragma once

#include <array>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "itguide/sim.hpp"

namespace itguide {

/// User-facing configuration in I/O units: degrees, kilometres, g.
struct ScenarioConfig {
    EngagementMode mode = EngagementMode::ThreeD;
    double speed = 250.0;
    std::array<double, 3> interceptor_km{-10.0, 0.0, 0.0};
    std::array<double, 3> target_km{0.0, 0.0, 0.0};
    double theta_m0_deg = -10.0;
    double psi_m0_deg = 10.0;
    double sigma0_deg = 10.0;
    double tf = 50.0;

    std::optional<double> k1; // empty: 1 - cos(sigma_max) - 0.01
    double k2 = 1.0;
    double k3 = 1.0;
    double k4 = 1.0;
    double ky = 7.0;
    double kz = 7.0;
    double nav_constant = 3.0;

    double phi = 300.0;
    double sigma_max_deg = 60.0;
    double eps_sin = 1e-3;

    int n = 2;
    double rho = 0.1;
    BoundMode bound_mode = BoundMode::Constant;
    double a_max_g = 10.0;
    double a_max_l_g = 1.0;
    double g = 9.81;
    double b_max = 1e4;

    double dt = 1e-3;
    double hit_radius = 1.0;
    double t_max_factor = 1.5;
    int log_stride = 1;

    bool baseline = false;
    double a_clip = std::numeric_limits<double>::infinity(); // [m/s^2]

    /// k1 in effect (explicit or the automatic default).
    double effective_k1() const;

    /// Throws ValidationError naming the offending key and constraint.
    void validate() const;

    Scenario scenario() const;
    GuidanceConfig guidance() const;
    SimSettings sim_settings() const;

    bool operator==(const ScenarioConfig &) const = default;
};

/// Every recognised key, in serialization order.
const std::vector<std::string> &config_keys();

/// Sets one key from its text value. Throws ParseError for unknown keys or
/// malformed values.
void set_config_value(ScenarioConfig &config, const std::string &key,
                      const std::string &value);

/// Text value of one key as written by serialize_config.
std::string get_config_value(const ScenarioConfig &config, const std::string &key);

/// Applies `key = value` lines on top of base. `#` starts a comment.
/// Does not validate.
ScenarioConfig parse_config(const std::string &text, ScenarioConfig base = {});

/// Reads and parses a file; ParseError carries the path and line number.
ScenarioConfig load_config_file(const std::string &path, ScenarioConfig base = {});

/// Full key set, one `key = value` per line, numbers in shortest round-trip form.
std::string serialize_config(const ScenarioConfig &config);

inline constexpr const char *kEnvPrefix = "ITGUIDE_";

/// Environment variable consulted for a key: ITGUIDE_ + upper-cased key with
/// dots replaced by underscores, e.g. ITGUIDE_SATURATION_RHO.
std::string env_var_name(const std::string &key);

/// Overrides keys from environment variables that are set.
void apply_env_overrides(ScenarioConfig &config);

/// Defaults, then preset base (if any), then file (if any), then environment,
/// then validation.
ScenarioConfig load_config(const std::optional<std::string> &path,
                           const std::optional<std::string> &preset = {});

struct LabeledConfig {
    std::string label;
    ScenarioConfig config;
};

const std::vector<std::string> &preset_names();

/// Scenario family of a preset. Throws std::invalid_argument for unknown names.
std::vector<LabeledConfig> preset_scenarios(const std::string &name);

/// Parses `key=v1,v2,...` and returns one labelled copy of base per value.
/// Throws std::invalid_argument when the value list is empty.
std::vector<LabeledConfig> sweep_scenarios(const ScenarioConfig &base,
                                           const std::string &spec);

std::string to_string(EngagementMode mode);
std::string to_string(BoundMode mode);

} // namespace itguide
