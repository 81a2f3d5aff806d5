// Fixed-step closed-loop simulation of the guided engagement.
#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "itguide/engagement.hpp"
#include "itguide/guidance3d.hpp"
#include "itguide/guidance_planar.hpp"
#include "itguide/saturation.hpp"
#include "itguide/shaping.hpp"

namespace itguide {

enum class EngagementMode { ThreeD, Planar };
enum class GuidanceLaw { Proposed, Baseline };

struct Scenario {
    EngagementMode mode = EngagementMode::ThreeD;
    double speed = 250.0;               // [m/s]
    Vec3 interceptor{-10000.0, 0.0, 0.0}; // [m]
    Vec3 target{0.0, 0.0, 0.0};         // [m]
    double theta_m0 = -0.17453292519943295; // 3D launch heading [rad]
    double psi_m0 = 0.17453292519943295;
    double sigma0 = 0.17453292519943295; // planar launch lead [rad]
    double tf = 50.0;                   // desired impact time [s]
};

struct GuidanceConfig {
    ShapingParams shaping;
    GuidanceGains3D gains3d;
    GuidanceGainsPlanar gains_planar;
    SaturationParams saturation;
    double nav_constant = 3.0; // carried for baselines; unused by the proposed laws
    GuidanceLaw law = GuidanceLaw::Proposed;
    double a_clip = std::numeric_limits<double>::infinity();
};

struct SimSettings {
    double dt = 1e-3;
    double t_max_factor = 1.5;
    double hit_radius = 1.0;
    int log_stride = 1;

    void validate() const;
};

enum class RunStatus { Intercepted = 1, Timeout = 2, GuardTripped = 3 };

const char *to_string(RunStatus status);

struct RunOutcome {
    RunStatus status = RunStatus::Timeout;
    double impact_time = 0.0;   // interpolated r = 0 crossing, or time of minimum range
    double miss_distance = 0.0; // minimum range reached [m]
    std::string message;
};

/// One logged row. Planar runs store the in-plane LOS angle in theta, fill
/// psi = theta_m = a_mz = 0 and psi_m = sigma, and put their single Lyapunov
/// value in vy.
struct LogRow {
    double t = 0, r = 0, theta = 0, psi = 0, theta_m = 0, psi_m = 0, sigma = 0;
    double a_my = 0, a_mz = 0, by = 0, bz = 0;
    double z1 = 0, z2 = 0, z3 = 0, z4 = 0, zy = 0, zz = 0;
    double a_y_max = 0, a_z_max = 0, vz = 0, vy = 0;
    double x = 0, y = 0, z = 0;
    bool guarded = false; // a shaping guard or the z1 < 0 clamp was active
    int status = 0;       // 0 while running; RunStatus value on the final row
};

struct TrajectoryLog {
    EngagementMode mode = EngagementMode::ThreeD;
    std::vector<LogRow> rows;
};

struct SimResult {
    TrajectoryLog log;
    RunOutcome outcome;
    bool infeasible_shaping = false; // z1(0) < 0: deadline shorter than straight-line flight
};

template <std::size_t N> using StateVector = std::array<double, N>;

/// Classical fourth-order Runge-Kutta step of x' = f(t, x).
template <std::size_t N, class F>
StateVector<N> rk4_step(F &&f, double t, const StateVector<N> &x, double dt) {
    auto axpy = [](const StateVector<N> &a, double s, const StateVector<N> &b) {
        StateVector<N> out;
        for (std::size_t i = 0; i < N; ++i)
            out[i] = a[i] + s * b[i];
        return out;
    };
    const StateVector<N> k1 = f(t, x);
    const StateVector<N> k2 = f(t + 0.5 * dt, axpy(x, 0.5 * dt, k1));
    const StateVector<N> k3 = f(t + 0.5 * dt, axpy(x, 0.5 * dt, k2));
    const StateVector<N> k4 = f(t + dt, axpy(x, dt, k3));
    StateVector<N> out;
    for (std::size_t i = 0; i < N; ++i)
        out[i] = x[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

/// Initial 3D state from the scenario geometry (LOS from positions).
State3D initial_state3d(const Scenario &scenario);
/// Initial planar state; the engagement plane is the inertial x-y plane.
PlanarState initial_state_planar(const Scenario &scenario);

/// Integrates the scenario until interception, a passed closest approach
/// inside 10 hit radii, timeout at t_max_factor * tf, or a fatal guard.
SimResult run_scenario(const Scenario &scenario, const GuidanceConfig &config,
                       const SimSettings &settings);

/// The planar proposed law driving the 3D plant on its theta = theta_M =
/// a_Mz = 0 section (planar sigma <-> psi_M, planar theta <-> psi).
SimResult run_planar_on_3d(const Scenario &scenario,
                           const GuidanceConfig &config,
                           const SimSettings &settings);

struct LyapunovSample {
    double t = 0.0;
    double vz = 0.0; // 0.5 (z3^2 + zz^2); zero for planar logs
    double vy = 0.0; // 0.5 (z4^2 + zy^2), or 0.5 (z2^2 + zy^2) for planar logs
};

std::vector<LyapunovSample> lyapunov_trace(const TrajectoryLog &log);

} // namespace itguide
