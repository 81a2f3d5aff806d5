#include "itguide/saturation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "itguide/errors.hpp"

namespace itguide {

void SaturationParams::validate() const {
    if (n < 2 || n % 2 != 0)
        throw ValidationError("saturation.n must be an even integer >= 2 (got " +
                              std::to_string(n) + ")");
    if (!(rho > 0.0))
        throw ValidationError("saturation.rho must be > 0");
    if (!(a_max > 0.0))
        throw ValidationError("saturation.a_max must be > 0");
    if (!(g > 0.0))
        throw ValidationError("saturation.g must be > 0");
    if (!(b_max > 0.0))
        throw ValidationError("saturation.b_max must be > 0");
    if (mode == BoundMode::WingTail && !(a_max_l > 0.0 && a_max_l < a_max))
        throw ValidationError(
            "saturation.a_max_l must satisfy 0 < a_max_l < a_max in wing-tail mode");
}

double saturation_bracket(double ratio, int n) {
    double p = 1.0;
    for (int i = 0; i < n; ++i)
        p *= ratio;
    return 1.0 - p;
}

double saturation_rate(double a, double b, double a_max_axis,
                       const SaturationParams &params) {
    return saturation_bracket(a / a_max_axis, params.n) * b - params.rho * a;
}

double limit_command(double b, const SaturationParams &params, bool &limited) {
    if (std::abs(b) > params.b_max) {
        limited = true;
        return std::copysign(params.b_max, b);
    }
    return b;
}

AxisBounds roll_coupled_bounds(double a_my, double a_mz, double a_max) {
    const double norm = std::hypot(a_my, a_mz);
    if (norm < kAccelDirectionGuard) {
        const double split = a_max / std::sqrt(2.0);
        return {split, split};
    }
    return {a_max * std::abs(a_my) / norm, a_max * std::abs(a_mz) / norm};
}

AxisBounds wing_tail_bounds(double a_my, double a_mz, double a_max,
                            double a_max_l) {
    const double span = a_max - a_max_l;
    const double norm = std::hypot(a_my, a_mz);
    if (norm < kAccelDirectionGuard) {
        const double b = a_max_l + span / std::sqrt(2.0);
        return {b, b};
    }
    return {a_max_l + span * std::abs(a_my) / norm,
            a_max_l + span * std::abs(a_mz) / norm};
}

AxisBounds acceleration_bounds(const SaturationParams &params, double a_my,
                               double a_mz) {
    switch (params.mode) {
    case BoundMode::RollCoupled:
        return roll_coupled_bounds(a_my, a_mz, params.a_max);
    case BoundMode::WingTail:
        return wing_tail_bounds(a_my, a_mz, params.a_max, params.a_max_l);
    case BoundMode::Constant:
        break;
    }
    return {params.a_max, params.a_max};
}

AxisRatios saturation_ratios(const SaturationParams &params, double a_my,
                             double a_mz, AxisBounds bounds) {
    auto ratio = [&](double a, double bound) {
        if (bound > 0.0)
            return std::abs(a) / bound;
        // Only reachable in roll-coupled mode with this component exactly zero.
        return std::hypot(a_my, a_mz) / params.a_max;
    };
    const double ry = ratio(a_my, bounds.y);
    const double rz = ratio(a_mz, bounds.z);
    if (params.mode == BoundMode::Constant)
        return {ry, rz};
    const double common = std::max(ry, rz);
    return {common, common};
}

} // namespace itguide
