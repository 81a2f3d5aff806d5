#include "itguide/engagement.hpp"

#include <algorithm>
#include <cmath>

#include "itguide/errors.hpp"

namespace itguide {

KinematicRates3D kinematic_rates3d(const State3D &s, double speed) {
    const double cos_t = std::cos(s.theta);
    const double cos_tm = std::cos(s.theta_m);
    if (std::abs(cos_t) < kCosGuard)
        throw GuardError(GuardError::Kind::DegenerateGeometry,
                         "LOS elevation at +-90 deg (cos theta below guard)");
    if (std::abs(cos_tm) < kCosGuard)
        throw GuardError(GuardError::Kind::DegenerateGeometry,
                         "heading elevation at +-90 deg (cos theta_M below guard)");
    if (s.r < kRangeGuard)
        throw GuardError(GuardError::Kind::DegenerateGeometry,
                         "range below guard");

    const double sin_t = std::sin(s.theta);
    const double sin_tm = std::sin(s.theta_m);
    const double tan_tm = std::tan(s.theta_m);
    const double cos_pm = std::cos(s.psi_m);
    const double sin_pm = std::sin(s.psi_m);
    const double v = speed;

    KinematicRates3D d;
    d.r_dot = -v * cos_tm * cos_pm;
    d.theta_dot = -v * sin_tm / s.r;
    d.psi_dot = -v * cos_tm * sin_pm / (s.r * cos_t);
    d.theta_m_dot = s.a_mz / v - d.psi_dot * sin_t * sin_pm - d.theta_dot * cos_pm;
    d.psi_m_dot = s.a_my / (v * cos_tm) + d.psi_dot * tan_tm * cos_pm * sin_t -
                  d.psi_dot * cos_t - d.theta_dot * tan_tm * sin_pm;
    return d;
}

Derivative3D derivatives3d(const State3D &s, double speed, AuxCommand command,
                           const SaturationParams &sat) {
    const KinematicRates3D k = kinematic_rates3d(s, speed);
    const AxisBounds bounds = acceleration_bounds(sat, s.a_my, s.a_mz);
    const AxisRatios ratio = saturation_ratios(sat, s.a_my, s.a_mz, bounds);

    Derivative3D d;
    d.r_dot = k.r_dot;
    d.theta_dot = k.theta_dot;
    d.psi_dot = k.psi_dot;
    d.theta_m_dot = k.theta_m_dot;
    d.psi_m_dot = k.psi_m_dot;
    d.a_my_dot = saturation_bracket(ratio.y, sat.n) * command.by - sat.rho * s.a_my;
    d.a_mz_dot = saturation_bracket(ratio.z, sat.n) * command.bz - sat.rho * s.a_mz;
    return d;
}

DerivativePlanar derivatives_planar(const PlanarState &s, double speed,
                                    double by, const SaturationParams &sat) {
    if (s.r < kRangeGuard)
        throw GuardError(GuardError::Kind::DegenerateGeometry,
                         "range below guard");
    const double v = speed;
    DerivativePlanar d;
    d.r_dot = -v * std::cos(s.sigma);
    d.theta_dot = -v * std::sin(s.sigma) / s.r;
    d.sigma_dot = s.a_my / v - d.theta_dot;
    d.a_my_dot = saturation_bracket(s.a_my / sat.a_max, sat.n) * by - sat.rho * s.a_my;
    return d;
}

double effective_lead_angle(double theta_m, double psi_m) {
    // sin^2(sigma/2) = sin^2(theta_M/2) + cos(theta_M) sin^2(psi_M/2); avoids
    // the precision loss of acos near 1.
    const double st = std::sin(0.5 * theta_m);
    const double sp = std::sin(0.5 * psi_m);
    const double h = st * st + std::cos(theta_m) * sp * sp;
    return 2.0 * std::asin(std::sqrt(std::clamp(h, 0.0, 1.0)));
}

Vec3 los_unit_vector(double theta, double psi) {
    const double ct = std::cos(theta);
    return {ct * std::cos(psi), ct * std::sin(psi), std::sin(theta)};
}

Vec3 inertial_position(const State3D &s, const Vec3 &target) {
    if (s.r <= 0.0)
        return target;
    const Vec3 u = los_unit_vector(s.theta, s.psi);
    return {target[0] - s.r * u[0], target[1] - s.r * u[1], target[2] - s.r * u[2]};
}

} // namespace itguide
