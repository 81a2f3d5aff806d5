#include "itguide/guidance_planar.hpp"

#include <algorithm>
#include <cmath>

#include "itguide/errors.hpp"
#include "itguide/guidance3d.hpp"

namespace itguide {

namespace {

void require_range(double r) {
    if (r < kRangeGuard)
        throw GuardError(GuardError::Kind::DegenerateGeometry, "range below guard");
}

} // namespace

void GuidanceGainsPlanar::validate() const {
    if (!(k2 > 0.0 && ky > 0.0))
        throw ValidationError("gains.k2 and gains.ky must be > 0");
}

double stabilizing_planar(const PlanarState &s, double sigma_d_dot, double z2,
                          double k2, double speed) {
    require_range(s.r);
    return speed * (sigma_d_dot - speed * std::sin(s.sigma) / s.r - k2 * z2);
}

double stabilizing_rate_planar(const PlanarState &s, double sigma_dot,
                               double r_dot, double sigma_d_ddot, double z2_dot,
                               const GuidanceGainsPlanar &gains, double speed) {
    require_range(s.r);
    const double v = speed;
    return v * (sigma_d_ddot - v * std::cos(s.sigma) / s.r * sigma_dot +
                v * std::sin(s.sigma) / (s.r * s.r) * r_dot - gains.k2 * z2_dot);
}

double commanded_input_planar(const PlanarState &s, const ErrorSetPlanar &e,
                              double alpha_y_dot, double a_y_max,
                              const GuidanceGainsPlanar &gains,
                              const SaturationParams &sat, double speed,
                              bool *limited) {
    const double den = saturation_bracket(s.a_my / a_y_max, sat.n);
    if (den < kBracketGuard)
        throw GuardError(GuardError::Kind::DenominatorSingular,
                         "lateral acceleration pinned at its bound");
    bool clamped = false;
    const double b = limit_command(
        (sat.rho * s.a_my + alpha_y_dot - e.z2 / speed - gains.ky * e.zy) / den, sat,
        clamped);
    if (limited)
        *limited = clamped;
    return b;
}

double baseline_unsaturated(const PlanarState &s, double sigma_d_dot, double z2,
                            double k2, double speed, double a_clip) {
    const double a = stabilizing_planar(s, sigma_d_dot, z2, k2, speed);
    if (std::isfinite(a_clip))
        return std::clamp(a, -a_clip, a_clip);
    return a;
}

GuidanceEvaluationPlanar evaluate_guidance_planar(
    const PlanarState &s, double tf, double speed, const ShapingParams &shaping,
    const GuidanceGainsPlanar &gains, const SaturationParams &sat) {
    GuidanceEvaluationPlanar ev;
    ev.rates = derivatives_planar(s, speed, 0.0, sat);
    ev.rates.a_my_dot = 0.0;
    ev.r_ddot = speed * std::sin(s.sigma) * ev.rates.sigma_dot;

    const RangeError re =
        range_error(s.t, tf, s.r, speed, ev.rates.r_dot, ev.r_ddot);
    ev.z1_dot = re.z1_dot;
    ev.z1_ddot = re.z1_ddot;
    const DesiredLead lead = desired_lead(re.z1, shaping);
    ev.sigma_d = lead.sigma_d;
    ev.infeasible = lead.infeasible;
    ev.lead = lead_rates(re.z1, re.z1_dot, re.z1_ddot, lead.sigma_d, shaping);

    ev.errors.z1 = re.z1;
    ev.errors.z2 = s.sigma - ev.sigma_d;
    ev.alpha_y = stabilizing_planar(s, ev.lead.dot, ev.errors.z2, gains.k2, speed);
    ev.errors.zy = s.a_my - ev.alpha_y;

    const double z2_dot = ev.rates.sigma_dot - ev.lead.dot;
    ev.alpha_y_dot = stabilizing_rate_planar(s, ev.rates.sigma_dot, ev.rates.r_dot,
                                             ev.lead.ddot, z2_dot, gains, speed);
    ev.by = commanded_input_planar(s, ev.errors, ev.alpha_y_dot, sat.a_max, gains,
                                   sat, speed, &ev.limited);
    return ev;
}

} // namespace itguide
