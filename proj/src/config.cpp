#include "itguide/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "itguide/errors.hpp"

namespace itguide {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

std::string trim(const std::string &s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string format_double(double v) {
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

/// Six significant digits for messages.
std::string short_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double parse_double(const std::string &key, const std::string &text) {
    const std::string t = lower(trim(text));
    if (t == "inf" || t == "+inf" || t == "infinity")
        return std::numeric_limits<double>::infinity();
    if (t == "-inf" || t == "-infinity")
        return -std::numeric_limits<double>::infinity();
    double v = 0.0;
    const char *begin = t.data();
    const char *end = begin + t.size();
    if (!t.empty() && *begin == '+')
        ++begin;
    const auto res = std::from_chars(begin, end, v);
    if (t.empty() || res.ec != std::errc() || res.ptr != end)
        throw ParseError(key + ": expected a number, got '" + text + "'");
    return v;
}

int parse_int(const std::string &key, const std::string &text) {
    const std::string t = trim(text);
    int v = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size())
        throw ParseError(key + ": expected an integer, got '" + text + "'");
    return v;
}

bool parse_bool(const std::string &key, const std::string &text) {
    const std::string t = lower(trim(text));
    if (t == "true" || t == "1" || t == "yes" || t == "on")
        return true;
    if (t == "false" || t == "0" || t == "no" || t == "off")
        return false;
    throw ParseError(key + ": expected true or false, got '" + text + "'");
}

struct Field {
    std::string key;
    std::function<void(ScenarioConfig &, const std::string &, const std::string &)> set;
    std::function<std::string(const ScenarioConfig &)> get;
};

Field real(std::string key, double ScenarioConfig::*member) {
    return {key,
            [member](ScenarioConfig &c, const std::string &k, const std::string &v) {
                c.*member = parse_double(k, v);
            },
            [member](const ScenarioConfig &c) { return format_double(c.*member); }};
}

Field integer(std::string key, int ScenarioConfig::*member) {
    return {key,
            [member](ScenarioConfig &c, const std::string &k, const std::string &v) {
                c.*member = parse_int(k, v);
            },
            [member](const ScenarioConfig &c) { return std::to_string(c.*member); }};
}

Field component(std::string key, std::array<double, 3> ScenarioConfig::*member,
                std::size_t i) {
    return {key,
            [member, i](ScenarioConfig &c, const std::string &k, const std::string &v) {
                (c.*member)[i] = parse_double(k, v);
            },
            [member, i](const ScenarioConfig &c) { return format_double((c.*member)[i]); }};
}

const std::vector<Field> &fields() {
    static const std::vector<Field> table = [] {
        std::vector<Field> f;
        f.push_back({"mode",
                     [](ScenarioConfig &c, const std::string &k, const std::string &v) {
                         const std::string t = lower(trim(v));
                         if (t == "3d")
                             c.mode = EngagementMode::ThreeD;
                         else if (t == "planar" || t == "2d")
                             c.mode = EngagementMode::Planar;
                         else
                             throw ParseError(k + ": expected 3d or planar, got '" + v + "'");
                     },
                     [](const ScenarioConfig &c) { return to_string(c.mode); }});
        f.push_back(real("scenario.speed", &ScenarioConfig::speed));
        f.push_back(real("scenario.tf", &ScenarioConfig::tf));
        f.push_back(component("scenario.interceptor_x_km", &ScenarioConfig::interceptor_km, 0));
        f.push_back(component("scenario.interceptor_y_km", &ScenarioConfig::interceptor_km, 1));
        f.push_back(component("scenario.interceptor_z_km", &ScenarioConfig::interceptor_km, 2));
        f.push_back(component("scenario.target_x_km", &ScenarioConfig::target_km, 0));
        f.push_back(component("scenario.target_y_km", &ScenarioConfig::target_km, 1));
        f.push_back(component("scenario.target_z_km", &ScenarioConfig::target_km, 2));
        f.push_back(real("scenario.theta_m0_deg", &ScenarioConfig::theta_m0_deg));
        f.push_back(real("scenario.psi_m0_deg", &ScenarioConfig::psi_m0_deg));
        f.push_back(real("scenario.sigma0_deg", &ScenarioConfig::sigma0_deg));
        f.push_back({"gains.k1",
                     [](ScenarioConfig &c, const std::string &k, const std::string &v) {
                         if (lower(trim(v)) == "auto")
                             c.k1.reset();
                         else
                             c.k1 = parse_double(k, v);
                     },
                     [](const ScenarioConfig &c) {
                         return c.k1 ? format_double(*c.k1) : std::string("auto");
                     }});
        f.push_back(real("gains.k2", &ScenarioConfig::k2));
        f.push_back(real("gains.k3", &ScenarioConfig::k3));
        f.push_back(real("gains.k4", &ScenarioConfig::k4));
        f.push_back(real("gains.ky", &ScenarioConfig::ky));
        f.push_back(real("gains.kz", &ScenarioConfig::kz));
        f.push_back(real("gains.nav_constant", &ScenarioConfig::nav_constant));
        f.push_back(real("shaping.phi", &ScenarioConfig::phi));
        f.push_back(real("shaping.sigma_max_deg", &ScenarioConfig::sigma_max_deg));
        f.push_back(real("shaping.eps_sin", &ScenarioConfig::eps_sin));
        f.push_back(integer("saturation.n", &ScenarioConfig::n));
        f.push_back(real("saturation.rho", &ScenarioConfig::rho));
        f.push_back({"saturation.bound_mode",
                     [](ScenarioConfig &c, const std::string &k, const std::string &v) {
                         const std::string t = lower(trim(v));
                         if (t == "constant")
                             c.bound_mode = BoundMode::Constant;
                         else if (t == "roll-coupled")
                             c.bound_mode = BoundMode::RollCoupled;
                         else if (t == "wing-tail")
                             c.bound_mode = BoundMode::WingTail;
                         else
                             throw ParseError(k + ": expected constant, roll-coupled or "
                                                  "wing-tail, got '" + v + "'");
                     },
                     [](const ScenarioConfig &c) { return to_string(c.bound_mode); }});
        f.push_back(real("saturation.a_max_g", &ScenarioConfig::a_max_g));
        f.push_back(real("saturation.a_max_l_g", &ScenarioConfig::a_max_l_g));
        f.push_back(real("saturation.g", &ScenarioConfig::g));
        f.push_back(real("saturation.b_max", &ScenarioConfig::b_max));
        f.push_back(real("sim.dt", &ScenarioConfig::dt));
        f.push_back(real("sim.hit_radius", &ScenarioConfig::hit_radius));
        f.push_back(real("sim.t_max_factor", &ScenarioConfig::t_max_factor));
        f.push_back(integer("sim.log_stride", &ScenarioConfig::log_stride));
        f.push_back({"baseline.enabled",
                     [](ScenarioConfig &c, const std::string &k, const std::string &v) {
                         c.baseline = parse_bool(k, v);
                     },
                     [](const ScenarioConfig &c) {
                         return std::string(c.baseline ? "true" : "false");
                     }});
        f.push_back(real("baseline.a_clip", &ScenarioConfig::a_clip));
        return f;
    }();
    return table;
}

const Field &find_field(const std::string &key) {
    for (const Field &f : fields())
        if (f.key == key)
            return f;
    throw ParseError("unknown configuration key '" + key + "'");
}

void require(bool ok, const std::string &message) {
    if (!ok)
        throw ValidationError(message);
}

} // namespace

std::string to_string(EngagementMode mode) {
    return mode == EngagementMode::Planar ? "planar" : "3d";
}

std::string to_string(BoundMode mode) {
    switch (mode) {
    case BoundMode::RollCoupled:
        return "roll-coupled";
    case BoundMode::WingTail:
        return "wing-tail";
    case BoundMode::Constant:
        break;
    }
    return "constant";
}

double ScenarioConfig::effective_k1() const {
    if (k1)
        return *k1;
    return 1.0 - std::cos(sigma_max_deg * kDeg) - 0.01;
}

void ScenarioConfig::validate() const {
    require(speed > 0.0, "scenario.speed must be > 0");
    require(tf > 0.0, "scenario.tf must be > 0");
    require(interceptor_km != target_km,
            "scenario: interceptor and target positions must differ");
    require(sigma_max_deg > 0.0 && sigma_max_deg < 90.0,
            "shaping.sigma_max_deg must lie in (0, 90)");
    const double k1_bound = 1.0 - std::cos(sigma_max_deg * kDeg);
    const double k = effective_k1();
    require(k > 0.0 && k < k1_bound,
            "gains.k1 must satisfy 0 < k1 < 1 - cos(shaping.sigma_max_deg) = " +
                short_double(k1_bound) + " (got " + short_double(k) + ")");
    require(k2 > 0.0, "gains.k2 must be > 0");
    require(k3 > 0.0, "gains.k3 must be > 0");
    require(k4 > 0.0, "gains.k4 must be > 0");
    require(ky > 0.0, "gains.ky must be > 0");
    require(kz > 0.0, "gains.kz must be > 0");
    require(phi > 0.0, "shaping.phi must be > 0");
    require(eps_sin > 0.0 && eps_sin < 1.0, "shaping.eps_sin must lie in (0, 1)");
    require(n >= 2 && n % 2 == 0,
            "saturation.n must be an even integer >= 2 (got " + std::to_string(n) + ")");
    require(rho > 0.0, "saturation.rho must be > 0");
    require(g > 0.0, "saturation.g must be > 0");
    require(a_max_g > 0.0, "saturation.a_max_g must be > 0");
    require(b_max > 0.0, "saturation.b_max must be > 0");
    if (bound_mode == BoundMode::WingTail)
        require(a_max_l_g > 0.0 && a_max_l_g < a_max_g,
                "saturation.a_max_l_g must satisfy 0 < a_max_l_g < a_max_g in "
                "wing-tail mode");
    require(dt > 0.0, "sim.dt must be > 0");
    require(hit_radius > 0.0, "sim.hit_radius must be > 0");
    require(t_max_factor > 1.0, "sim.t_max_factor must be > 1");
    require(log_stride >= 1, "sim.log_stride must be >= 1");
    require(a_clip > 0.0, "baseline.a_clip must be > 0");
    if (baseline)
        require(mode == EngagementMode::Planar,
                "baseline.enabled requires mode = planar");
}

Scenario ScenarioConfig::scenario() const {
    Scenario s;
    s.mode = mode;
    s.speed = speed;
    for (std::size_t i = 0; i < 3; ++i) {
        s.interceptor[i] = interceptor_km[i] * 1000.0;
        s.target[i] = target_km[i] * 1000.0;
    }
    s.theta_m0 = theta_m0_deg * kDeg;
    s.psi_m0 = psi_m0_deg * kDeg;
    s.sigma0 = sigma0_deg * kDeg;
    s.tf = tf;
    return s;
}

GuidanceConfig ScenarioConfig::guidance() const {
    GuidanceConfig c;
    c.shaping.k1 = effective_k1();
    c.shaping.phi = phi;
    c.shaping.sigma_max = sigma_max_deg * kDeg;
    c.shaping.eps_sin = eps_sin;
    c.gains3d = {k3, k4, ky, kz};
    c.gains_planar = {k2, ky};
    c.saturation.n = n;
    c.saturation.rho = rho;
    c.saturation.mode = bound_mode;
    c.saturation.a_max = a_max_g * g;
    c.saturation.a_max_l = a_max_l_g * g;
    c.saturation.g = g;
    c.saturation.b_max = b_max;
    c.nav_constant = nav_constant;
    c.law = baseline ? GuidanceLaw::Baseline : GuidanceLaw::Proposed;
    c.a_clip = a_clip;
    return c;
}

SimSettings ScenarioConfig::sim_settings() const {
    SimSettings s;
    s.dt = dt;
    s.hit_radius = hit_radius;
    s.t_max_factor = t_max_factor;
    s.log_stride = log_stride;
    return s;
}

const std::vector<std::string> &config_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const Field &f : fields())
            k.push_back(f.key);
        return k;
    }();
    return keys;
}

void set_config_value(ScenarioConfig &config, const std::string &key,
                      const std::string &value) {
    find_field(key).set(config, key, value);
}

std::string get_config_value(const ScenarioConfig &config, const std::string &key) {
    return find_field(key).get(config);
}

ScenarioConfig parse_config(const std::string &text, ScenarioConfig base) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            set_config_value(base, key, value);
        } catch (const ParseError &e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return base;
}

ScenarioConfig load_config_file(const std::string &path, ScenarioConfig base) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(path + ": cannot open configuration file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_config(buffer.str(), std::move(base));
    } catch (const ParseError &e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string serialize_config(const ScenarioConfig &config) {
    std::string out;
    for (const Field &f : fields())
        out += f.key + " = " + f.get(config) + "\n";
    return out;
}

std::string env_var_name(const std::string &key) {
    std::string name = kEnvPrefix;
    for (char c : key)
        name += c == '.' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return name;
}

void apply_env_overrides(ScenarioConfig &config) {
    for (const Field &f : fields()) {
        const std::string name = env_var_name(f.key);
        if (const char *value = std::getenv(name.c_str())) {
            try {
                f.set(config, f.key, value);
            } catch (const ParseError &e) {
                throw ParseError(name + ": " + e.what());
            }
        }
    }
}

ScenarioConfig load_config(const std::optional<std::string> &path,
                           const std::optional<std::string> &preset) {
    ScenarioConfig config;
    if (preset)
        config = preset_scenarios(*preset).front().config;
    if (path)
        config = load_config_file(*path, config);
    apply_env_overrides(config);
    config.validate();
    return config;
}

const std::vector<std::string> &preset_names() {
    static const std::vector<std::string> names = {
        "table1-nominal",    "fig2-tf-sweep",  "fig3-heading-sweep",
        "fig4-rollcoupled",  "fig5-wingtail",  "fig6-planar-compare"};
    return names;
}

std::vector<LabeledConfig> preset_scenarios(const std::string &name) {
    const ScenarioConfig nominal;
    std::vector<LabeledConfig> out;
    if (name == "table1-nominal") {
        out.push_back({"nominal", nominal});
    } else if (name == "fig2-tf-sweep") {
        for (double tf : {45.0, 50.0, 55.0}) {
            ScenarioConfig c = nominal;
            c.tf = tf;
            out.push_back({"tf" + format_double(tf), c});
        }
    } else if (name == "fig3-heading-sweep") {
        const std::array<std::array<double, 2>, 4> headings{
            {{0.0, 0.0}, {0.0, 30.0}, {-30.0, 0.0}, {-30.0, 30.0}}};
        for (const auto &h : headings) {
            ScenarioConfig c = nominal;
            c.theta_m0_deg = h[0];
            c.psi_m0_deg = h[1];
            out.push_back({"theta" + format_double(h[0]) + "_psi" + format_double(h[1]), c});
        }
    } else if (name == "fig4-rollcoupled") {
        ScenarioConfig c = nominal;
        c.bound_mode = BoundMode::RollCoupled;
        out.push_back({"rollcoupled", c});
    } else if (name == "fig5-wingtail") {
        ScenarioConfig c = nominal;
        c.bound_mode = BoundMode::WingTail;
        c.a_max_g = 5.0;
        c.a_max_l_g = 1.0;
        out.push_back({"wingtail", c});
    } else if (name == "fig6-planar-compare") {
        const std::array<std::array<double, 2>, 6> rows{
            {{50.0, 10.0}, {50.0, 20.0}, {50.0, 30.0}, {55.0, 10.0}, {60.0, 10.0}, {65.0, 10.0}}};
        for (bool baseline : {false, true}) {
            for (const auto &row : rows) {
                ScenarioConfig c = nominal;
                c.mode = EngagementMode::Planar;
                c.tf = row[0];
                c.sigma0_deg = row[1];
                c.baseline = baseline;
                out.push_back({std::string(baseline ? "baseline" : "proposed") + "_tf" +
                                   format_double(row[0]) + "_sigma" + format_double(row[1]),
                               c});
            }
        }
    } else {
        std::string known;
        for (const auto &n : preset_names())
            known += (known.empty() ? "" : ", ") + n;
        throw std::invalid_argument("unknown preset '" + name + "' (known: " + known + ")");
    }
    return out;
}

std::vector<LabeledConfig> sweep_scenarios(const ScenarioConfig &base,
                                           const std::string &spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("sweep must look like key=v1,v2,... (got '" + spec + "')");
    const std::string key = trim(spec.substr(0, eq));
    find_field(key);
    std::vector<LabeledConfig> out;
    std::stringstream values(spec.substr(eq + 1));
    std::string value;
    while (std::getline(values, value, ',')) {
        value = trim(value);
        if (value.empty())
            continue;
        ScenarioConfig c = base;
        set_config_value(c, key, value);
        out.push_back({key + "_" + value, c});
    }
    if (out.empty())
        throw std::invalid_argument("sweep over " + key + " has no values");
    return out;
}

} // namespace itguide
