// Planar impact-time guidance with saturated lateral acceleration, and an
// unsaturated backstepping baseline used for effort comparisons.
#pragma once

#include <limits>

#include "itguide/engagement.hpp"
#include "itguide/saturation.hpp"
#include "itguide/shaping.hpp"

namespace itguide {

struct GuidanceGainsPlanar {
    double k2 = 1.0; // lead error [1/s]
    double ky = 7.0; // acceleration error [1/s]

    void validate() const;
};

struct ErrorSetPlanar {
    double z1 = 0.0;
    double z2 = 0.0; // sigma - sigma_d
    double zy = 0.0; // a_My - alpha_y
};

/// alpha_y = V [sigma_d_dot - V sin(sigma) / r - k2 z2].
double stabilizing_planar(const PlanarState &state, double sigma_d_dot,
                          double z2, double k2, double speed);

double stabilizing_rate_planar(const PlanarState &state, double sigma_dot,
                               double r_dot, double sigma_d_ddot,
                               double z2_dot, const GuidanceGainsPlanar &gains,
                               double speed);

/// Auxiliary command, clamped to sat.b_max (limited reports the clamp).
/// Throws GuardError(DenominatorSingular) when the bracket is below
/// kBracketGuard.
double commanded_input_planar(const PlanarState &state,
                              const ErrorSetPlanar &errors,
                              double alpha_y_dot, double a_y_max,
                              const GuidanceGainsPlanar &gains,
                              const SaturationParams &sat, double speed,
                              bool *limited = nullptr);

/// Applies alpha_y directly as lateral acceleration, optionally clipped.
double baseline_unsaturated(
    const PlanarState &state, double sigma_d_dot, double z2, double k2,
    double speed, double a_clip = std::numeric_limits<double>::infinity());

struct GuidanceEvaluationPlanar {
    DerivativePlanar rates; // a_my_dot left at zero
    double r_ddot = 0.0;
    double z1_dot = 0.0;
    double z1_ddot = 0.0;
    LeadRates lead;
    bool infeasible = false;
    double sigma_d = 0.0;
    ErrorSetPlanar errors;
    double alpha_y = 0.0;
    double alpha_y_dot = 0.0;
    double by = 0.0;
    bool limited = false;
};

GuidanceEvaluationPlanar evaluate_guidance_planar(
    const PlanarState &state, double tf, double speed,
    const ShapingParams &shaping, const GuidanceGainsPlanar &gains,
    const SaturationParams &sat);

} // namespace itguide
