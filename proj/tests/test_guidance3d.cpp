#include <cmath>

#include "doctest.h"
#include "itguide/errors.hpp"
#include "itguide/guidance3d.hpp"
#include "itguide/sim.hpp"
#include "oracles.hpp"

using namespace itguide;
using oracle::kDeg;

namespace {

constexpr double kV = 250.0;

State3D advance(const State3D &s, const Derivative3D &d, double h) {
    State3D o = s;
    o.r += h * d.r_dot;
    o.theta += h * d.theta_dot;
    o.psi += h * d.psi_dot;
    o.theta_m += h * d.theta_m_dot;
    o.psi_m += h * d.psi_m_dot;
    o.a_my += h * d.a_my_dot;
    o.a_mz += h * d.a_mz_dot;
    o.t += h;
    return o;
}

const TrajectoryLog &nominal_log() {
    static const TrajectoryLog log = run_scenario({}, {}, {}).log;
    return log;
}

} // namespace

TEST_SUITE("guidance3d") {

TEST_CASE("range error") {
    RangeError e = range_error(0.0, 50.0, 10000.0, kV, -242.0, 1.0);
    CHECK(e.z1 == 2500.0);
    CHECK(e.z1_dot == doctest::Approx(-8.0));
    CHECK(e.z1_ddot == -1.0);
    e = range_error(50.0, 50.0, 0.0, kV, -kV, 0.0);
    CHECK(e.z1 == 0.0);
}

TEST_CASE("stabilizing functions") {
    const GuidanceGains3D g;
    State3D s;
    s.r = 1000.0;
    const KinematicRates3D zero{};
    StabilizingFunctions a = stabilizing_functions(s, zero, 0.0, 0.0, 0.0, 0.0, g, kV);
    CHECK(a.alpha_y == 0.0);
    CHECK(a.alpha_z == 0.0);
    a = stabilizing_functions(s, zero, 0.0, 0.0, 0.1, 0.0, g, kV);
    CHECK(a.alpha_z == doctest::Approx(-25.0).epsilon(1e-14));
    CHECK(a.alpha_y == 0.0);
    a = stabilizing_functions(s, zero, 0.0, 0.0, 0.0, 0.1, g, kV);
    CHECK(a.alpha_y == doctest::Approx(-25.0).epsilon(1e-14));
    CHECK(a.alpha_z == 0.0);
}

TEST_CASE("LOS second derivatives") {
    State3D s;
    s.r = 10000.0;
    LosSecondDerivatives l = los_second_derivatives(s, kinematic_rates3d(s, kV), kV);
    CHECK(l.theta_ddot == 0.0);
    CHECK(l.psi_ddot == 0.0);

    s.theta_m = -10.0 * kDeg;
    s.psi_m = 10.0 * kDeg;
    KinematicRates3D k = kinematic_rates3d(s, kV);
    k.theta_m_dot = 0.0;
    k.psi_m_dot = 0.0;
    l = los_second_derivatives(s, k, kV);
    CHECK(l.theta_ddot == doctest::Approx(1.0526e-4).epsilon(1e-4));
}

TEST_CASE("LOS second derivatives match a one-step finite difference") {
    State3D s;
    s.r = 8000.0;
    s.theta = 0.1;
    s.psi = -0.2;
    s.theta_m = -0.3;
    s.psi_m = 0.4;
    s.a_my = 12.0;
    s.a_mz = -20.0;
    const KinematicRates3D k = kinematic_rates3d(s, kV);
    const LosSecondDerivatives l = los_second_derivatives(s, k, kV);
    const Derivative3D d = derivatives3d(s, kV, {}, SaturationParams{});
    const double h = 1e-4;
    Derivative3D frozen = d;
    frozen.a_my_dot = frozen.a_mz_dot = 0.0;
    const KinematicRates3D kp = kinematic_rates3d(advance(s, frozen, h), kV);
    const KinematicRates3D km = kinematic_rates3d(advance(s, frozen, -h), kV);
    CHECK(oracle::relative_error(l.theta_ddot, (kp.theta_dot - km.theta_dot) / (2 * h)) < 1e-4);
    CHECK(oracle::relative_error(l.psi_ddot, (kp.psi_dot - km.psi_dot) / (2 * h)) < 1e-4);
}

TEST_CASE("stabilizing rates") {
    const GuidanceGains3D g;
    State3D s;
    s.r = 1000.0;
    const KinematicRates3D zero{};
    const LosSecondDerivatives lz{};
    StabilizingRates r = stabilizing_rates(s, zero, lz, ShapingOutput{}, 0.0, g, kV);
    CHECK(r.alpha_y_dot == 0.0);
    CHECK(r.alpha_z_dot == 0.0);
    KinematicRates3D k{};
    k.psi_m_dot = 0.01;
    r = stabilizing_rates(s, k, lz, ShapingOutput{}, 0.0, g, kV);
    CHECK(r.alpha_y_dot == doctest::Approx(-2.5).epsilon(1e-14));
}

TEST_CASE("commanded inputs") {
    const GuidanceGains3D g;
    const SaturationParams sat;
    State3D s;
    s.r = 1000.0;
    AuxCommand b = commanded_inputs(s, {}, {}, {98.1, 98.1}, g, sat, kV);
    CHECK(b.by == 0.0);
    CHECK(b.bz == 0.0);
    ErrorSet3D e;
    e.zy = 1.0;
    b = commanded_inputs(s, e, {}, {98.1, 98.1}, g, sat, kV);
    CHECK(b.by == doctest::Approx(-7.0).epsilon(1e-15));
    CHECK_FALSE(b.limited);

    s.a_my = 98.1;
    try {
        commanded_inputs(s, e, {}, {98.1, 98.1}, g, sat, kV);
        FAIL("expected DenominatorSingular");
    } catch (const GuardError &err) {
        CHECK(err.kind() == GuardError::Kind::DenominatorSingular);
    }
}

TEST_CASE("alpha rates match finite differences along the closed loop") {
    const TrajectoryLog &log = nominal_log();
    const ShapingParams sp;
    const GuidanceGains3D g;
    const SaturationParams sat;
    int checked = 0;
    for (std::size_t i = 0; i < log.rows.size(); i += 97) {
        const LogRow &row = log.rows[i];
        if (row.guarded || std::abs(row.z1) > 0.95 * sp.phi || row.r < 500.0)
            continue;
        const State3D s = oracle::state_of(row);
        const GuidanceEvaluation3D ev = evaluate_guidance3d(s, 50.0, kV, sp, g, sat);
        if (ev.shaping.sigma_d < 2.0 * kDeg)
            continue;
        const Derivative3D d = derivatives3d(s, kV, ev.command, sat);
        const double h = 1e-4;
        const auto plus = evaluate_guidance3d(advance(s, d, h), 50.0, kV, sp, g, sat);
        const auto minus = evaluate_guidance3d(advance(s, d, -h), 50.0, kV, sp, g, sat);
        const double fy = (plus.alpha.alpha_y - minus.alpha.alpha_y) / (2 * h);
        const double fz = (plus.alpha.alpha_z - minus.alpha.alpha_z) / (2 * h);
        CHECK(oracle::relative_error(ev.alpha_rates.alpha_y_dot, fy) < 1e-3);
        CHECK(oracle::relative_error(ev.alpha_rates.alpha_z_dot, fz) < 1e-3);
        ++checked;
    }
    CHECK(checked > 20);
}

}
