// Engagement state types and kinematics for the 3D spherical-coordinate and
// planar pursuit of a stationary target at constant speed.
#pragma once

#include <array>

#include "itguide/saturation.hpp"

namespace itguide {

using Vec3 = std::array<double, 3>;

inline constexpr double kCosGuard = 1e-9;   // |cos theta|, |cos theta_M|
inline constexpr double kRangeGuard = 1e-6; // [m]

/// Augmented 3D engagement state. Angles in radians.
struct State3D {
    double r = 0.0;       // range to target [m]
    double theta = 0.0;   // LOS elevation
    double psi = 0.0;     // LOS azimuth
    double theta_m = 0.0; // heading elevation, measured from the LOS frame
    double psi_m = 0.0;   // heading azimuth, measured from the LOS frame
    double a_my = 0.0;    // body-Y lateral acceleration [m/s^2]
    double a_mz = 0.0;    // body-Z lateral acceleration [m/s^2]
    double t = 0.0;       // [s]
};

struct PlanarState {
    double r = 0.0;
    double theta = 0.0; // LOS angle
    double sigma = 0.0; // lead angle
    double a_my = 0.0;
    double t = 0.0;
};

/// Kinematic rows only; they depend on the state but not on the commands.
struct KinematicRates3D {
    double r_dot = 0.0;
    double theta_dot = 0.0;
    double psi_dot = 0.0;
    double theta_m_dot = 0.0;
    double psi_m_dot = 0.0;
};

struct Derivative3D {
    double r_dot = 0.0;
    double theta_dot = 0.0;
    double psi_dot = 0.0;
    double theta_m_dot = 0.0;
    double psi_m_dot = 0.0;
    double a_my_dot = 0.0;
    double a_mz_dot = 0.0;
};

struct DerivativePlanar {
    double r_dot = 0.0;
    double theta_dot = 0.0;
    double sigma_dot = 0.0;
    double a_my_dot = 0.0;
};

/// Auxiliary inputs driving the saturation model.
struct AuxCommand {
    double by = 0.0;
    double bz = 0.0;
    bool limited = false; // either command hit SaturationParams::b_max
};

/// Throws GuardError(DegenerateGeometry) when |cos theta| or |cos theta_M|
/// drops below kCosGuard.
KinematicRates3D kinematic_rates3d(const State3D &state, double speed);

/// Full closed-loop state derivative. Actuator rows use the bounds active at
/// the current accelerations.
Derivative3D derivatives3d(const State3D &state, double speed,
                           AuxCommand command, const SaturationParams &sat);

/// Planar kinematics. The actuator row uses sat.a_max as the axis bound.
/// Throws GuardError(DegenerateGeometry) when r < kRangeGuard.
DerivativePlanar derivatives_planar(const PlanarState &state, double speed,
                                    double by, const SaturationParams &sat);

/// sigma from cos(sigma) = cos(psi_M) cos(theta_M); always >= 0.
double effective_lead_angle(double theta_m, double psi_m);

/// Unit vector from interceptor to target, elevation-then-azimuth.
Vec3 los_unit_vector(double theta, double psi);

/// Interceptor position: target - r * u_LOS.
Vec3 inertial_position(const State3D &state, const Vec3 &target);

} // namespace itguide
