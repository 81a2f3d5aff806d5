// Smooth input-saturation rate model and per-axis acceleration bound schedules.
#pragma once

namespace itguide {

enum class BoundMode { Constant, RollCoupled, WingTail };

struct SaturationParams {
    int n = 2;            // even exponent, >= 2
    double rho = 0.1;     // leak coefficient [1/s]
    BoundMode mode = BoundMode::Constant;
    double a_max = 98.1;  // per-axis (Constant) or resultant bound [m/s^2]
    double a_max_l = 9.81; // roll-independent floor, WingTail only [m/s^2]
    double g = 9.81;      // [m/s^2], used when bounds are given in g
    /// Magnitude limit on the auxiliary command b [m/s^3]. Keeps the bracket
    /// away from zero when the stabilizing acceleration lies outside the
    /// bound; RK4 stays stable while dt < 2.78 a_axis / (n b_max).
    double b_max = 1e4;

    /// Throws ValidationError naming the offending field.
    void validate() const;
};

struct AxisBounds {
    double y = 0.0;
    double z = 0.0;
};

/// Acceleration magnitudes below this are treated as a zero direction vector.
inline constexpr double kAccelDirectionGuard = 1e-6;

/// 1 - ratio^n.
double saturation_bracket(double ratio, int n);

/// a_dot = [1 - (a / a_max_axis)^n] b - rho a. Requires a_max_axis > 0.
double saturation_rate(double a, double b, double a_max_axis,
                       const SaturationParams &params);

/// Clamps |b| to params.b_max; sets limited when it does.
double limit_command(double b, const SaturationParams &params, bool &limited);

/// Per-axis bounds when only the resultant acceleration is limited.
/// Direction ratios are taken in magnitude; a zero vector gets the symmetric
/// split a_max / sqrt(2).
AxisBounds roll_coupled_bounds(double a_my, double a_mz, double a_max);

/// Per-axis bounds with a roll-independent floor a_max_l.
AxisBounds wing_tail_bounds(double a_my, double a_mz, double a_max,
                            double a_max_l);

/// Active bounds for the configured mode at the current accelerations.
AxisBounds acceleration_bounds(const SaturationParams &params, double a_my,
                               double a_mz);

struct AxisRatios {
    double y = 0.0;
    double z = 0.0;
};

/// Normalised magnitudes |a| / a_axis_max used inside the saturation bracket.
///
/// In roll-coupled mode an axis whose component is exactly zero has a zero
/// bound; the ratio is then replaced by its limit along the acceleration ray,
/// |a| / a_max, which is what every non-degenerate point on that axis gives.
///
/// For the state-dependent modes both axes share the larger ratio. The bounds
/// move with the acceleration direction, so independent per-axis brackets do
/// not keep the state inside the admissible set; the common bracket vanishes
/// on its boundary and does. In roll-coupled mode the two ratios already
/// coincide, so only the wing-tail schedule is affected.
AxisRatios saturation_ratios(const SaturationParams &params, double a_my,
                             double a_mz, AxisBounds bounds);

} // namespace itguide
