#include "itguide/sim.hpp"

#include <cmath>
#include <string>

#include "itguide/errors.hpp"

namespace itguide {

namespace {

State3D unpack3d(double t, const StateVector<7> &x) {
    return {x[0], x[1], x[2], x[3], x[4], x[5], x[6], t};
}

StateVector<7> pack(const Derivative3D &d) {
    return {d.r_dot, d.theta_dot, d.psi_dot, d.theta_m_dot, d.psi_m_dot,
            d.a_my_dot, d.a_mz_dot};
}

LogRow kinematic_row3d(const State3D &s, const Vec3 &target) {
    LogRow row;
    row.t = s.t;
    row.r = s.r;
    row.theta = s.theta;
    row.psi = s.psi;
    row.theta_m = s.theta_m;
    row.psi_m = s.psi_m;
    row.sigma = effective_lead_angle(s.theta_m, s.psi_m);
    row.a_my = s.a_my;
    row.a_mz = s.a_mz;
    const Vec3 p = inertial_position(s, target);
    row.x = p[0];
    row.y = p[1];
    row.z = p[2];
    return row;
}

LogRow kinematic_row_planar(const PlanarState &s, const Vec3 &target) {
    LogRow row;
    row.t = s.t;
    row.r = s.r;
    row.theta = s.theta;
    row.psi_m = s.sigma;
    row.sigma = s.sigma;
    row.a_my = s.a_my;
    const double r = std::max(s.r, 0.0);
    row.x = target[0] - r * std::cos(s.theta);
    row.y = target[1] - r * std::sin(s.theta);
    row.z = target[2];
    return row;
}

void fill_planar_guidance(LogRow &row, const GuidanceEvaluationPlanar &ev,
                          double a_y_max) {
    row.by = ev.by;
    row.z1 = ev.errors.z1;
    row.z2 = ev.errors.z2;
    row.zy = ev.errors.zy;
    row.a_y_max = a_y_max;
    row.vy = 0.5 * (ev.errors.z2 * ev.errors.z2 + ev.errors.zy * ev.errors.zy);
    row.guarded = ev.lead.guarded || ev.limited;
}

// Proposed law on the 3D plant.
struct Proposed3DSystem {
    static constexpr std::size_t N = 7;
    const Scenario &sc;
    const GuidanceConfig &cfg;

    StateVector<N> derivative(double t, const StateVector<N> &x) const {
        const State3D s = unpack3d(t, x);
        const GuidanceEvaluation3D ev = evaluate_guidance3d(
            s, sc.tf, sc.speed, cfg.shaping, cfg.gains3d, cfg.saturation);
        return pack(derivatives3d(s, sc.speed, ev.command, cfg.saturation));
    }

    bool infeasible(double t, const StateVector<N> &x) const {
        return sc.speed * (sc.tf - t) - x[0] < 0.0;
    }

    LogRow kinematic_row(double t, const StateVector<N> &x) const {
        return kinematic_row3d(unpack3d(t, x), sc.target);
    }

    LogRow record(double t, const StateVector<N> &x) const {
        const State3D s = unpack3d(t, x);
        LogRow row = kinematic_row3d(s, sc.target);
        const GuidanceEvaluation3D ev = evaluate_guidance3d(
            s, sc.tf, sc.speed, cfg.shaping, cfg.gains3d, cfg.saturation);
        row.by = ev.command.by;
        row.bz = ev.command.bz;
        row.z1 = ev.errors.z1;
        row.z2 = ev.errors.z2;
        row.z3 = ev.errors.z3;
        row.z4 = ev.errors.z4;
        row.zy = ev.errors.zy;
        row.zz = ev.errors.zz;
        row.a_y_max = ev.bounds.y;
        row.a_z_max = ev.bounds.z;
        row.vz = 0.5 * (ev.errors.z3 * ev.errors.z3 + ev.errors.zz * ev.errors.zz);
        row.vy = 0.5 * (ev.errors.z4 * ev.errors.z4 + ev.errors.zy * ev.errors.zy);
        row.guarded = ev.shaping.guarded || ev.command.limited;
        return row;
    }
};

// Proposed planar law on the planar plant.
struct ProposedPlanarSystem {
    static constexpr std::size_t N = 4;
    const Scenario &sc;
    const GuidanceConfig &cfg;

    static PlanarState unpack(double t, const StateVector<N> &x) {
        return {x[0], x[1], x[2], x[3], t};
    }

    StateVector<N> derivative(double t, const StateVector<N> &x) const {
        const PlanarState s = unpack(t, x);
        const GuidanceEvaluationPlanar ev = evaluate_guidance_planar(
            s, sc.tf, sc.speed, cfg.shaping, cfg.gains_planar, cfg.saturation);
        const DerivativePlanar d = derivatives_planar(s, sc.speed, ev.by, cfg.saturation);
        return {d.r_dot, d.theta_dot, d.sigma_dot, d.a_my_dot};
    }

    bool infeasible(double t, const StateVector<N> &x) const {
        return sc.speed * (sc.tf - t) - x[0] < 0.0;
    }

    LogRow kinematic_row(double t, const StateVector<N> &x) const {
        return kinematic_row_planar(unpack(t, x), sc.target);
    }

    LogRow record(double t, const StateVector<N> &x) const {
        const PlanarState s = unpack(t, x);
        LogRow row = kinematic_row_planar(s, sc.target);
        const GuidanceEvaluationPlanar ev = evaluate_guidance_planar(
            s, sc.tf, sc.speed, cfg.shaping, cfg.gains_planar, cfg.saturation);
        fill_planar_guidance(row, ev, cfg.saturation.a_max);
        return row;
    }
};

// Baseline on the planar plant: lateral acceleration is algebraic.
struct BaselinePlanarSystem {
    static constexpr std::size_t N = 3;
    const Scenario &sc;
    const GuidanceConfig &cfg;

    struct Eval {
        PlanarState state;
        double sigma_d = 0.0;
        double z1 = 0.0;
        double z2 = 0.0;
        bool guarded = false;
    };

    Eval evaluate(double t, const StateVector<N> &x) const {
        Eval e;
        e.state = {x[0], x[1], x[2], 0.0, t};
        if (e.state.r < kRangeGuard)
            throw GuardError(GuardError::Kind::DegenerateGeometry, "range below guard");
        const double v = sc.speed;
        // z1_ddot only enters sigma_d_ddot, which the baseline does not use.
        const double z1 = v * (sc.tf - t) - e.state.r;
        const double z1_dot = -v + v * std::cos(e.state.sigma);
        const DesiredLead lead = desired_lead(z1, cfg.shaping);
        const LeadRates rates = lead_rates(z1, z1_dot, 0.0, lead.sigma_d, cfg.shaping);
        e.sigma_d = lead.sigma_d;
        e.z1 = z1;
        e.z2 = e.state.sigma - lead.sigma_d;
        e.guarded = rates.guarded;
        e.state.a_my = baseline_unsaturated(e.state, rates.dot, e.z2,
                                            cfg.gains_planar.k2, v, cfg.a_clip);
        return e;
    }

    StateVector<N> derivative(double t, const StateVector<N> &x) const {
        const Eval e = evaluate(t, x);
        const DerivativePlanar d = derivatives_planar(e.state, sc.speed, 0.0, cfg.saturation);
        return {d.r_dot, d.theta_dot, d.sigma_dot};
    }

    bool infeasible(double t, const StateVector<N> &x) const {
        return sc.speed * (sc.tf - t) - x[0] < 0.0;
    }

    LogRow kinematic_row(double t, const StateVector<N> &x) const {
        return kinematic_row_planar({x[0], x[1], x[2], 0.0, t}, sc.target);
    }

    LogRow record(double t, const StateVector<N> &x) const {
        const Eval e = evaluate(t, x);
        LogRow row = kinematic_row_planar(e.state, sc.target);
        row.z1 = e.z1;
        row.z2 = e.z2;
        row.a_y_max = cfg.saturation.a_max;
        row.vy = 0.5 * e.z2 * e.z2;
        row.guarded = e.guarded;
        return row;
    }
};

// Planar law driving the 3D plant on the theta = theta_M = a_Mz = 0 section.
struct PlanarOn3DSystem {
    static constexpr std::size_t N = 7;
    const Scenario &sc;
    const GuidanceConfig &cfg;

    GuidanceEvaluationPlanar evaluate(const State3D &s) const {
        const PlanarState p{s.r, s.psi, s.psi_m, s.a_my, s.t};
        return evaluate_guidance_planar(p, sc.tf, sc.speed, cfg.shaping,
                                        cfg.gains_planar, cfg.saturation);
    }

    StateVector<N> derivative(double t, const StateVector<N> &x) const {
        const State3D s = unpack3d(t, x);
        const GuidanceEvaluationPlanar ev = evaluate(s);
        return pack(derivatives3d(s, sc.speed, {ev.by, 0.0}, cfg.saturation));
    }

    bool infeasible(double t, const StateVector<N> &x) const {
        return sc.speed * (sc.tf - t) - x[0] < 0.0;
    }

    LogRow kinematic_row(double t, const StateVector<N> &x) const {
        return kinematic_row3d(unpack3d(t, x), sc.target);
    }

    LogRow record(double t, const StateVector<N> &x) const {
        const State3D s = unpack3d(t, x);
        LogRow row = kinematic_row3d(s, sc.target);
        fill_planar_guidance(row, evaluate(s), cfg.saturation.a_max);
        row.a_z_max = cfg.saturation.a_max;
        return row;
    }
};

template <class System>
LogRow record_safe(const System &sys, double t,
                   const StateVector<System::N> &x) {
    try {
        return sys.record(t, x);
    } catch (const GuardError &) {
        LogRow row = sys.kinematic_row(t, x);
        row.guarded = true;
        return row;
    }
}

/// One RK4 step of length dt that lands exactly on any crossing of the sgmf
/// boundary layer edge |z1| = phi. The shaping second derivative jumps there,
/// and a stage straddling the jump costs the step its order.
template <class System, class F>
StateVector<System::N> step_across_kinks(const System &sys, F &&f, double t,
                                         const StateVector<System::N> &x, double dt,
                                         const Scenario &sc) {
    const double phi = sys.cfg.shaping.phi;
    const auto edge = [&](double tt, const StateVector<System::N> &xx) {
        return std::abs(sc.speed * (sc.tf - tt) - xx[0]) - phi;
    };
    const StateVector<System::N> full = rk4_step(f, t, x, dt);
    const double g0 = edge(t, x);
    if (g0 == 0.0 || (g0 > 0.0) == (edge(t + dt, full) > 0.0))
        return full;
    double lo = 0.0, hi = dt;
    while (hi - lo > 1e-12 * dt) {
        const double mid = 0.5 * (lo + hi);
        if ((edge(t + mid, rk4_step(f, t, x, mid)) > 0.0) == (g0 > 0.0))
            lo = mid;
        else
            hi = mid;
    }
    // Integrate up to the last point before the edge, cross it with an Euler
    // nudge of at most 1e-12 dt, and finish with every stage past the edge.
    const StateVector<System::N> before = rk4_step(f, t, x, lo);
    const StateVector<System::N> slope = f(t + lo, before);
    StateVector<System::N> after;
    for (std::size_t i = 0; i < System::N; ++i)
        after[i] = before[i] + (hi - lo) * slope[i];
    return rk4_step(f, t + hi, after, dt - hi);
}

template <class System>
SimResult integrate(const System &sys, StateVector<System::N> x,
                    const Scenario &sc, const SimSettings &st) {
    SimResult result;
    result.log.mode = sc.mode;
    result.infeasible_shaping = sys.infeasible(0.0, x);
    auto &rows = result.log.rows;

    const double dt = st.dt;
    const long max_steps = static_cast<long>(std::ceil(st.t_max_factor * sc.tf / dt));
    const auto f = [&sys](double tt, const StateVector<System::N> &xx) {
        return sys.derivative(tt, xx);
    };

    double t = 0.0;
    rows.push_back(record_safe(sys, t, x));
    double r_min = x[0];
    double t_min = 0.0;
    RunOutcome &out = result.outcome;
    out.status = RunStatus::Timeout;
    bool done = false;

    for (long step = 0; step < max_steps && !done; ++step) {
        StateVector<System::N> next;
        try {
            next = step_across_kinks(sys, f, t, x, dt, sc);
        } catch (const GuardError &err) {
            out.status = RunStatus::GuardTripped;
            out.message = std::string("guard at t = ") + std::to_string(t) + ": " + err.what();
            break;
        }
        const double t_next = static_cast<double>(step + 1) * dt;
        const double r = x[0];
        const double rn = next[0];
        bool finite = true;
        for (double v : next)
            finite = finite && std::isfinite(v);
        if (!finite) {
            out.status = RunStatus::GuardTripped;
            out.message = "non-finite state at t = " + std::to_string(t_next);
            break;
        }

        if (rn <= st.hit_radius) {
            out.status = RunStatus::Intercepted;
            out.impact_time = r > rn ? t + dt * r / (r - rn) : t_next;
            out.miss_distance = std::max(rn, 0.0);
            r_min = out.miss_distance;
            done = true;
        } else if (rn > r && r < 10.0 * st.hit_radius) {
            out.status = RunStatus::Timeout;
            out.message = "closest approach passed without interception";
            done = true;
        }
        if (rn < r_min) {
            r_min = rn;
            t_min = t_next;
        }
        if (out.status == RunStatus::Timeout && done)
            break; // keep x at the closest approach
        x = next;
        t = t_next;
        if (done || (step + 1) % st.log_stride == 0)
            rows.push_back(record_safe(sys, t, x));
    }

    if (out.status != RunStatus::Intercepted) {
        out.miss_distance = r_min;
        out.impact_time = t_min;
        if (out.status == RunStatus::Timeout && out.message.empty())
            out.message = "time limit reached";
    }
    if (rows.back().t != t)
        rows.push_back(record_safe(sys, t, x));
    if (rows.size() < 2)
        rows.push_back(rows.back()); // unreachable for max_steps >= 1
    rows.back().status = static_cast<int>(out.status);
    return result;
}

} // namespace

void SimSettings::validate() const {
    if (!(dt > 0.0))
        throw ValidationError("sim.dt must be > 0");
    if (!(hit_radius > 0.0))
        throw ValidationError("sim.hit_radius must be > 0");
    if (!(t_max_factor > 1.0))
        throw ValidationError("sim.t_max_factor must be > 1");
    if (log_stride < 1)
        throw ValidationError("sim.log_stride must be >= 1");
}

const char *to_string(RunStatus status) {
    switch (status) {
    case RunStatus::Intercepted:
        return "Intercepted";
    case RunStatus::Timeout:
        return "Timeout";
    case RunStatus::GuardTripped:
        return "GuardTripped";
    }
    return "Unknown";
}

State3D initial_state3d(const Scenario &sc) {
    const double dx = sc.target[0] - sc.interceptor[0];
    const double dy = sc.target[1] - sc.interceptor[1];
    const double dz = sc.target[2] - sc.interceptor[2];
    State3D s;
    s.r = std::sqrt(dx * dx + dy * dy + dz * dz);
    s.theta = s.r > 0.0 ? std::asin(dz / s.r) : 0.0;
    s.psi = std::atan2(dy, dx);
    s.theta_m = sc.theta_m0;
    s.psi_m = sc.psi_m0;
    return s;
}

PlanarState initial_state_planar(const Scenario &sc) {
    const double dx = sc.target[0] - sc.interceptor[0];
    const double dy = sc.target[1] - sc.interceptor[1];
    PlanarState s;
    s.r = std::hypot(dx, dy);
    s.theta = std::atan2(dy, dx);
    s.sigma = sc.sigma0;
    return s;
}

SimResult run_scenario(const Scenario &sc, const GuidanceConfig &cfg,
                       const SimSettings &st) {
    st.validate();
    if (sc.mode == EngagementMode::ThreeD) {
        const State3D s = initial_state3d(sc);
        return integrate(Proposed3DSystem{sc, cfg},
                         {s.r, s.theta, s.psi, s.theta_m, s.psi_m, s.a_my, s.a_mz},
                         sc, st);
    }
    const PlanarState p = initial_state_planar(sc);
    if (cfg.law == GuidanceLaw::Baseline)
        return integrate(BaselinePlanarSystem{sc, cfg}, {p.r, p.theta, p.sigma}, sc, st);
    return integrate(ProposedPlanarSystem{sc, cfg}, {p.r, p.theta, p.sigma, p.a_my},
                     sc, st);
}

SimResult run_planar_on_3d(const Scenario &sc, const GuidanceConfig &cfg,
                           const SimSettings &st) {
    st.validate();
    const PlanarState p = initial_state_planar(sc);
    Scenario sc3 = sc;
    sc3.mode = EngagementMode::ThreeD;
    SimResult res = integrate(PlanarOn3DSystem{sc3, cfg},
                              {p.r, 0.0, p.theta, 0.0, p.sigma, 0.0, 0.0}, sc3, st);
    return res;
}

std::vector<LyapunovSample> lyapunov_trace(const TrajectoryLog &log) {
    std::vector<LyapunovSample> out;
    out.reserve(log.rows.size());
    for (const LogRow &row : log.rows) {
        if (log.mode == EngagementMode::Planar)
            out.push_back({row.t, 0.0, 0.5 * (row.z2 * row.z2 + row.zy * row.zy)});
        else
            out.push_back({row.t, 0.5 * (row.z3 * row.z3 + row.zz * row.zz),
                           0.5 * (row.z4 * row.z4 + row.zy * row.zy)});
    }
    return out;
}

} // namespace itguide
