// Backstepping impact-time guidance for the 3D engagement with saturated
// lateral accelerations.
#pragma once

#include "itguide/engagement.hpp"
#include "itguide/saturation.hpp"
#include "itguide/shaping.hpp"

namespace itguide {

inline constexpr double kBracketGuard = 1e-6;

struct GuidanceGains3D {
    double k3 = 1.0; // elevation heading error [1/s]
    double k4 = 1.0; // azimuth heading error [1/s]
    double ky = 7.0; // body-Y acceleration error [1/s]
    double kz = 7.0; // body-Z acceleration error [1/s]

    void validate() const;
};

struct ErrorSet3D {
    double z1 = 0.0; // range error [m]
    double z2 = 0.0; // lead error (diagnostic only in 3D)
    double z3 = 0.0; // theta_M - theta_Md
    double z4 = 0.0; // psi_M - psi_Md
    double zy = 0.0; // a_My - alpha_y
    double zz = 0.0; // a_Mz - alpha_z
};

struct RangeError {
    double z1 = 0.0;
    double z1_dot = 0.0;
    double z1_ddot = 0.0;
};

/// z1 = V (tf - t) - r and its derivatives from the supplied range rate and
/// range acceleration. Valid past tf.
RangeError range_error(double t, double tf, double r, double speed,
                       double r_dot, double r_ddot);

/// Second derivative of range along the 3D kinematics.
double range_acceleration3d(const State3D &state, const KinematicRates3D &rates,
                            double speed);

struct StabilizingFunctions {
    double alpha_y = 0.0;
    double alpha_z = 0.0;
};

StabilizingFunctions stabilizing_functions(const State3D &state,
                                           const KinematicRates3D &rates,
                                           double theta_md_dot,
                                           double psi_md_dot, double z3,
                                           double z4,
                                           const GuidanceGains3D &gains,
                                           double speed);

struct LosSecondDerivatives {
    double theta_ddot = 0.0;
    double psi_ddot = 0.0;
};

LosSecondDerivatives los_second_derivatives(const State3D &state,
                                            const KinematicRates3D &rates,
                                            double speed);

struct StabilizingRates {
    double alpha_y_dot = 0.0;
    double alpha_z_dot = 0.0;
};

/// Exact time derivatives of the stabilizing functions. Heading-error rates
/// are formed internally from rates and shaping.
StabilizingRates stabilizing_rates(const State3D &state,
                                   const KinematicRates3D &rates,
                                   const LosSecondDerivatives &los,
                                   const ShapingOutput &shaping, double z4,
                                   const GuidanceGains3D &gains,
                                   double speed);

/// Auxiliary commands (by, bz). Throws GuardError(DenominatorSingular) if a
/// saturation bracket falls below kBracketGuard.
AuxCommand commanded_inputs(const State3D &state, const ErrorSet3D &errors,
                            const StabilizingRates &alpha_rates,
                            AxisBounds bounds, const GuidanceGains3D &gains,
                            const SaturationParams &sat, double speed);

/// Everything the law computes at one state; used for integration and logs.
struct GuidanceEvaluation3D {
    KinematicRates3D rates;
    RangeError range;
    ShapingOutput shaping;
    ErrorSet3D errors;
    StabilizingFunctions alpha;
    LosSecondDerivatives los;
    StabilizingRates alpha_rates;
    AxisBounds bounds;
    AuxCommand command;
    double sigma = 0.0;
};

GuidanceEvaluation3D evaluate_guidance3d(const State3D &state, double tf,
                                         double speed,
                                         const ShapingParams &shaping,
                                         const GuidanceGains3D &gains,
                                         const SaturationParams &sat);

} // namespace itguide
