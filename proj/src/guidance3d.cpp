#include "itguide/guidance3d.hpp"

#include <cmath>

#include "itguide/errors.hpp"

namespace itguide {

namespace {

void require_heading_elevation(double cos_tm) {
    if (std::abs(cos_tm) < kCosGuard)
        throw GuardError(GuardError::Kind::DegenerateGeometry,
                         "heading elevation at +-90 deg (cos theta_M below guard)");
}

} // namespace

void GuidanceGains3D::validate() const {
    if (!(k3 > 0.0 && k4 > 0.0 && ky > 0.0 && kz > 0.0))
        throw ValidationError("gains.k3, gains.k4, gains.ky, gains.kz must all be > 0");
}

RangeError range_error(double t, double tf, double r, double speed,
                       double r_dot, double r_ddot) {
    return {speed * (tf - t) - r, -speed - r_dot, -r_ddot};
}

double range_acceleration3d(const State3D &s, const KinematicRates3D &k,
                            double speed) {
    return speed * (std::sin(s.theta_m) * std::cos(s.psi_m) * k.theta_m_dot +
                    std::cos(s.theta_m) * std::sin(s.psi_m) * k.psi_m_dot);
}

StabilizingFunctions stabilizing_functions(const State3D &s,
                                           const KinematicRates3D &k,
                                           double theta_md_dot,
                                           double psi_md_dot, double z3,
                                           double z4,
                                           const GuidanceGains3D &gains,
                                           double speed) {
    const double cos_tm = std::cos(s.theta_m);
    require_heading_elevation(cos_tm);
    const double tan_tm = std::tan(s.theta_m);
    const double sin_t = std::sin(s.theta);
    const double cos_t = std::cos(s.theta);
    const double sin_pm = std::sin(s.psi_m);
    const double cos_pm = std::cos(s.psi_m);

    StabilizingFunctions a;
    a.alpha_y = speed * cos_tm *
                (-k.psi_dot * tan_tm * cos_pm * sin_t + k.psi_dot * cos_t +
                 k.theta_dot * tan_tm * sin_pm + psi_md_dot - gains.k4 * z4);
    a.alpha_z = speed * (k.psi_dot * sin_t * sin_pm + k.theta_dot * cos_pm +
                         theta_md_dot - gains.k3 * z3);
    return a;
}

LosSecondDerivatives los_second_derivatives(const State3D &s,
                                            const KinematicRates3D &k,
                                            double speed) {
    const double cos_t = std::cos(s.theta);
    if (std::abs(cos_t) < kCosGuard)
        throw GuardError(GuardError::Kind::DegenerateGeometry,
                         "LOS elevation at +-90 deg (cos theta below guard)");
    if (s.r < kRangeGuard)
        throw GuardError(GuardError::Kind::DegenerateGeometry, "range below guard");

    const double v = speed;
    const double r = s.r;
    const double sin_t = std::sin(s.theta);
    const double sin_tm = std::sin(s.theta_m);
    const double cos_tm = std::cos(s.theta_m);
    const double sin_pm = std::sin(s.psi_m);
    const double cos_pm = std::cos(s.psi_m);

    LosSecondDerivatives out;
    out.theta_ddot = v * sin_tm / (r * r) * k.r_dot - v * cos_tm / r * k.theta_m_dot;
    out.psi_ddot = v * cos_tm * sin_pm / (r * r * cos_t) * k.r_dot -
                   v * cos_tm * sin_pm * sin_t / (r * cos_t * cos_t) * k.theta_dot -
                   v * cos_tm * cos_pm / (r * cos_t) * k.psi_m_dot +
                   v * sin_tm * sin_pm / (r * cos_t) * k.theta_m_dot;
    return out;
}

StabilizingRates stabilizing_rates(const State3D &s, const KinematicRates3D &k,
                                   const LosSecondDerivatives &los,
                                   const ShapingOutput &sh, double z4,
                                   const GuidanceGains3D &gains, double speed) {
    const double cos_tm = std::cos(s.theta_m);
    require_heading_elevation(cos_tm);
    const double sin_tm = std::sin(s.theta_m);
    const double tan_tm = std::tan(s.theta_m);
    const double sec2_tm = 1.0 / (cos_tm * cos_tm);
    const double sin_t = std::sin(s.theta);
    const double cos_t = std::cos(s.theta);
    const double sin_pm = std::sin(s.psi_m);
    const double cos_pm = std::cos(s.psi_m);

    const double td = k.theta_dot, pd = k.psi_dot;
    const double tmd = k.theta_m_dot, pmd = k.psi_m_dot;
    const double tdd = los.theta_ddot, pdd = los.psi_ddot;
    const double z3_dot = tmd - sh.theta_md_dot;
    const double z4_dot = pmd - sh.psi_md_dot;

    // alpha_y = V cos(theta_M) * inner
    const double inner = -pd * tan_tm * cos_pm * sin_t + pd * cos_t +
                         td * tan_tm * sin_pm + sh.psi_md_dot - gains.k4 * z4;
    const double inner_dot =
        -pdd * tan_tm * cos_pm * sin_t - pd * tmd * sec2_tm * cos_pm * sin_t +
        pd * pmd * tan_tm * sin_pm * sin_t - pd * td * tan_tm * cos_pm * cos_t -
        pd * td * sin_t + pdd * cos_t + tdd * tan_tm * sin_pm +
        td * tmd * sec2_tm * sin_pm + td * pmd * tan_tm * cos_pm +
        sh.psi_md_ddot - gains.k4 * z4_dot;

    StabilizingRates out;
    out.alpha_y_dot = -speed * sin_tm * tmd * inner + speed * cos_tm * inner_dot;
    out.alpha_z_dot =
        speed * (pdd * sin_t * sin_pm + pd * td * cos_t * sin_pm +
                 pd * pmd * sin_t * cos_pm + tdd * cos_pm - td * pmd * sin_pm +
                 sh.theta_md_ddot - gains.k3 * z3_dot);
    return out;
}

AuxCommand commanded_inputs(const State3D &s, const ErrorSet3D &e,
                            const StabilizingRates &ar, AxisBounds bounds,
                            const GuidanceGains3D &gains,
                            const SaturationParams &sat, double speed) {
    const double cos_tm = std::cos(s.theta_m);
    require_heading_elevation(cos_tm);
    const AxisRatios ratio = saturation_ratios(sat, s.a_my, s.a_mz, bounds);
    const double den_y = saturation_bracket(ratio.y, sat.n);
    const double den_z = saturation_bracket(ratio.z, sat.n);
    if (den_y < kBracketGuard || den_z < kBracketGuard)
        throw GuardError(GuardError::Kind::DenominatorSingular,
                         "lateral acceleration pinned at its bound");

    AuxCommand b;
    b.by = (sat.rho * s.a_my + ar.alpha_y_dot - e.z4 / (speed * cos_tm) -
            gains.ky * e.zy) /
           den_y;
    b.bz = (sat.rho * s.a_mz + ar.alpha_z_dot - e.z3 / speed - gains.kz * e.zz) /
           den_z;
    b.by = limit_command(b.by, sat, b.limited);
    b.bz = limit_command(b.bz, sat, b.limited);
    return b;
}

GuidanceEvaluation3D evaluate_guidance3d(const State3D &s, double tf,
                                         double speed,
                                         const ShapingParams &shaping,
                                         const GuidanceGains3D &gains,
                                         const SaturationParams &sat) {
    GuidanceEvaluation3D ev;
    ev.rates = kinematic_rates3d(s, speed);
    ev.range = range_error(s.t, tf, s.r, speed, ev.rates.r_dot,
                           range_acceleration3d(s, ev.rates, speed));
    ev.shaping = shape(ev.range.z1, ev.range.z1_dot, ev.range.z1_ddot, shaping);
    ev.sigma = effective_lead_angle(s.theta_m, s.psi_m);

    ev.errors.z1 = ev.range.z1;
    ev.errors.z2 = ev.sigma - ev.shaping.sigma_d;
    ev.errors.z3 = s.theta_m - ev.shaping.theta_md;
    ev.errors.z4 = s.psi_m - ev.shaping.psi_md;

    ev.alpha = stabilizing_functions(s, ev.rates, ev.shaping.theta_md_dot,
                                     ev.shaping.psi_md_dot, ev.errors.z3,
                                     ev.errors.z4, gains, speed);
    ev.errors.zy = s.a_my - ev.alpha.alpha_y;
    ev.errors.zz = s.a_mz - ev.alpha.alpha_z;

    ev.los = los_second_derivatives(s, ev.rates, speed);
    ev.alpha_rates = stabilizing_rates(s, ev.rates, ev.los, ev.shaping,
                                       ev.errors.z4, gains, speed);
    ev.bounds = acceleration_bounds(sat, s.a_my, s.a_mz);
    ev.command = commanded_inputs(s, ev.errors, ev.alpha_rates, ev.bounds, gains,
                                  sat, speed);
    return ev;
}

} // namespace itguide
