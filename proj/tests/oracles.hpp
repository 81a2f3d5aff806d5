// Independent reference computations used by the tests.
#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "itguide/engagement.hpp"
#include "itguide/sim.hpp"

namespace oracle {

inline constexpr double kDeg = std::numbers::pi / 180.0;

using V3 = std::array<double, 3>;

inline double dot(const V3 &a, const V3 &b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const V3 &a) { return std::sqrt(dot(a, a)); }

/// Orthonormal LOS frame built directly from the angles.
struct LosFrame {
    V3 x, y, z;
};

inline LosFrame los_frame(double theta, double psi) {
    const double ct = std::cos(theta), st = std::sin(theta);
    const double cp = std::cos(psi), sp = std::sin(psi);
    return {{ct * cp, ct * sp, st}, {-sp, cp, 0.0}, {-st * cp, -st * sp, ct}};
}

/// Inertial velocity of the interceptor: heading angles measured in the LOS frame.
inline V3 inertial_velocity(const itguide::State3D &s, double speed) {
    const LosFrame f = los_frame(s.theta, s.psi);
    const double cx = std::cos(s.theta_m) * std::cos(s.psi_m);
    const double cy = std::cos(s.theta_m) * std::sin(s.psi_m);
    const double cz = std::sin(s.theta_m);
    V3 v;
    for (int i = 0; i < 3; ++i)
        v[i] = speed * (cx * f.x[i] + cy * f.y[i] + cz * f.z[i]);
    return v;
}

/// Range, LOS-angle rates from Cartesian relative motion.
struct CartesianRates {
    double r_dot, theta_dot, psi_dot;
};

inline CartesianRates cartesian_rates(const itguide::State3D &s, double speed) {
    const LosFrame f = los_frame(s.theta, s.psi);
    const V3 v = inertial_velocity(s, speed);
    // u = (p_T - p_M) / r; du/dt = (-v + (u.v) u) / r.
    return {-dot(f.x, v), -dot(f.z, v) / s.r, -dot(f.y, v) / (s.r * std::cos(s.theta))};
}

/// Centered difference of a scalar function.
template <class F> double central_difference(F &&f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Exact solution of x'' = -x with x(0) = 1, x'(0) = 0.
inline std::array<double, 2> harmonic(double t) { return {std::cos(t), -std::sin(t)}; }

inline double relative_error(double a, double b) {
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

inline itguide::State3D state_of(const itguide::LogRow &row) {
    return {row.r, row.theta, row.psi, row.theta_m, row.psi_m, row.a_my, row.a_mz, row.t};
}

} // namespace oracle
