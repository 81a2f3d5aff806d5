#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "itguide/commands.hpp"
#include "itguide/errors.hpp"
#include "itguide/io.hpp"

namespace py = pybind11;
using namespace itguide;

namespace {

ScenarioConfig resolve(const std::string &text, const std::optional<std::string> &preset) {
    ScenarioConfig base;
    if (preset)
        base = preset_scenarios(*preset).front().config;
    ScenarioConfig c = parse_config(text, base);
    c.validate();
    return c;
}

/// Column name -> float64 array, in trajectory CSV order.
py::dict trajectory_arrays(const TrajectoryLog &log) {
    const auto &cols = trajectory_columns();
    std::vector<std::vector<double>> columns(cols.size());
    for (const LogRow &r : log.rows) {
        const double v[] = {r.t,     r.r,     r.theta,   r.psi,   r.theta_m, r.psi_m, r.sigma,
                            r.a_my,  r.a_mz,  r.by,      r.bz,    r.z1,      r.z2,    r.z3,
                            r.z4,    r.zy,    r.zz,      r.a_y_max, r.a_z_max, r.vz,  r.vy,
                            r.x,     r.y,     r.z,       r.guarded ? 1.0 : 0.0,
                            static_cast<double>(r.status)};
        for (std::size_t c = 0; c < cols.size(); ++c)
            columns[c].push_back(v[c]);
    }
    py::dict out;
    for (std::size_t c = 0; c < cols.size(); ++c)
        out[py::str(cols[c])] =
            py::array_t<double>(static_cast<py::ssize_t>(columns[c].size()), columns[c].data());
    return out;
}

py::dict run(const std::string &text, const std::optional<std::string> &preset) {
    const ScenarioConfig c = resolve(text, preset);
    RunReport rep;
    {
        py::gil_scoped_release release;
        rep = run_config(c);
    }
    const auto json = py::module_::import("json");
    py::dict out;
    out["status"] = to_string(rep.result.outcome.status);
    out["exit_code"] = exit_code(rep.result.outcome.status);
    out["message"] = rep.result.outcome.message;
    out["metrics"] = json.attr("loads")(
        metrics_json(rep.metrics, {}, rep.result.infeasible_shaping, rep.result.outcome.message));
    out["trajectory"] = trajectory_arrays(rep.result.log);
    return out;
}

} // namespace

PYBIND11_MODULE(_itguide, m) {
    m.doc() = "Impact-time guidance with FOV and input-saturation constraints.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    m.def("run", &run, py::arg("config") = "", py::arg("preset") = py::none(),
          "Simulates one scenario given `key = value` text on top of defaults or a preset.\n"
          "Returns status, exit_code, message, metrics (dict) and trajectory (column -> array).");
    m.def("validate",
          [](const std::string &text, const std::optional<std::string> &preset) {
              return serialize_config(resolve(text, preset));
          },
          py::arg("config") = "", py::arg("preset") = py::none(),
          "Resolved configuration text; raises ValueError when invalid.");
    m.def("config_keys", &config_keys);
    m.def("preset_names", &preset_names);
    m.def("preset",
          [](const std::string &name) {
              std::vector<std::pair<std::string, std::string>> out;
              for (const auto &lc : preset_scenarios(name))
                  out.emplace_back(lc.label, serialize_config(lc.config));
              return out;
          },
          py::arg("name"), "(label, config text) for each scenario of a preset.");
    m.def("trajectory_columns", &trajectory_columns);

    m.def("sgmf", &sgmf, py::arg("x"), py::arg("phi"));
    m.def("desired_lead",
          [](double z1, double k1, double phi) {
              ShapingParams p;
              p.k1 = k1;
              p.phi = phi;
              return desired_lead(z1, p).sigma_d;
          },
          py::arg("z1"), py::arg("k1") = 0.49, py::arg("phi") = 300.0);
    m.def("saturation_rate",
          [](double a, double b, double a_max, int n, double rho) {
              SaturationParams p;
              p.n = n;
              p.rho = rho;
              return saturation_rate(a, b, a_max, p);
          },
          py::arg("a"), py::arg("b"), py::arg("a_max") = 98.1, py::arg("n") = 2,
          py::arg("rho") = 0.1);
}
