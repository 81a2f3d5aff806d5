#include <random>

#include "doctest.h"
#include "itguide/engagement.hpp"
#include "itguide/errors.hpp"
#include "oracles.hpp"

using namespace itguide;
using oracle::kDeg;

TEST_SUITE("engagement") {

TEST_CASE("collision course has no angle rates") {
    State3D s;
    s.r = 10000.0;
    const Derivative3D d = derivatives3d(s, 250.0, {}, SaturationParams{});
    CHECK(d.r_dot == -250.0);
    CHECK(d.theta_dot == 0.0);
    CHECK(d.psi_dot == 0.0);
    CHECK(d.theta_m_dot == 0.0);
    CHECK(d.psi_m_dot == 0.0);
    CHECK(d.a_my_dot == 0.0);
    CHECK(d.a_mz_dot == 0.0);
}

TEST_CASE("nominal launch geometry rates") {
    State3D s;
    s.r = 10000.0;
    s.theta_m = -10.0 * kDeg;
    s.psi_m = 10.0 * kDeg;
    const Derivative3D d = derivatives3d(s, 250.0, {}, SaturationParams{});
    CHECK(d.r_dot == doctest::Approx(-242.44).epsilon(1e-4));
    CHECK(d.theta_dot == doctest::Approx(4.341e-3).epsilon(1e-3));
}

TEST_CASE("LOS elevation at 90 deg is degenerate") {
    State3D s;
    s.r = 1000.0;
    s.theta = 90.0 * kDeg;
    CHECK_THROWS_AS(derivatives3d(s, 250.0, {}, SaturationParams{}), GuardError);
    try {
        kinematic_rates3d(s, 250.0);
    } catch (const GuardError &e) {
        CHECK(e.kind() == GuardError::Kind::DegenerateGeometry);
    }
}

TEST_CASE("planar rates") {
    SaturationParams sat;
    PlanarState s;
    s.r = 10000.0;
    DerivativePlanar d = derivatives_planar(s, 250.0, 0.0, sat);
    CHECK(d.r_dot == -250.0);
    CHECK(d.theta_dot == 0.0);
    CHECK(d.sigma_dot == 0.0);

    s.sigma = 10.0 * kDeg;
    s.a_my = 5.0;
    d = derivatives_planar(s, 250.0, 0.0, sat);
    CHECK(d.r_dot == doctest::Approx(-246.20).epsilon(1e-4));
    CHECK(d.theta_dot == doctest::Approx(-4.341e-3).epsilon(1e-3));
    CHECK(d.sigma_dot == doctest::Approx(5.0 / 250.0 - d.theta_dot).epsilon(1e-14));

    s.r = 0.0;
    CHECK_THROWS_AS(derivatives_planar(s, 250.0, 0.0, sat), GuardError);
}

TEST_CASE("effective lead angle") {
    CHECK(effective_lead_angle(0.0, 0.0) == 0.0);
    CHECK(effective_lead_angle(-10.0 * kDeg, 10.0 * kDeg) / kDeg ==
          doctest::Approx(14.106).epsilon(1e-4));
    CHECK(effective_lead_angle(44.427 * kDeg, 44.427 * kDeg) / kDeg ==
          doctest::Approx(59.335).epsilon(1e-4));
}

TEST_CASE("effective lead angle satisfies cos sigma = cos psi_M cos theta_M") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ang(-80.0 * kDeg, 80.0 * kDeg);
    for (int i = 0; i < 1000; ++i) {
        const double tm = ang(rng), pm = ang(rng);
        const double sigma = effective_lead_angle(tm, pm);
        CHECK(std::abs(std::cos(sigma) - std::cos(pm) * std::cos(tm)) < 1e-12);
        CHECK(sigma >= 0.0);
    }
}

TEST_CASE("inertial position") {
    State3D s;
    s.r = 10000.0;
    Vec3 p = inertial_position(s, {0.0, 0.0, 0.0});
    CHECK(p[0] == -10000.0);
    CHECK(p[1] == 0.0);
    CHECK(p[2] == 0.0);
    s.r = 0.0;
    p = inertial_position(s, {1.0, 2.0, 3.0});
    CHECK(p == Vec3{1.0, 2.0, 3.0});
}

TEST_CASE("kinematic rows agree with Cartesian relative motion") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ang(-70.0 * kDeg, 70.0 * kDeg);
    std::uniform_real_distribution<double> range(50.0, 20000.0);
    for (int i = 0; i < 500; ++i) {
        State3D s;
        s.r = range(rng);
        s.theta = ang(rng);
        s.psi = ang(rng);
        s.theta_m = ang(rng);
        s.psi_m = ang(rng);
        const KinematicRates3D k = kinematic_rates3d(s, 250.0);
        const auto c = oracle::cartesian_rates(s, 250.0);
        CHECK(k.r_dot == doctest::Approx(c.r_dot).epsilon(1e-12));
        CHECK(k.theta_dot == doctest::Approx(c.theta_dot).epsilon(1e-12));
        CHECK(k.psi_dot == doctest::Approx(c.psi_dot).epsilon(1e-12));
    }
}

TEST_CASE("any collision course has zero angle rates") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ang(-80.0 * kDeg, 80.0 * kDeg);
    for (int i = 0; i < 200; ++i) {
        State3D s;
        s.r = 1.0 + 1e4 * std::uniform_real_distribution<double>()(rng);
        s.theta = ang(rng);
        s.psi = ang(rng);
        const KinematicRates3D k = kinematic_rates3d(s, 250.0);
        CHECK(k.r_dot == -250.0);
        CHECK(k.theta_dot == 0.0);
        CHECK(k.psi_dot == 0.0);
        CHECK(k.theta_m_dot == 0.0);
        CHECK(k.psi_m_dot == 0.0);
    }
}

TEST_CASE("planar dynamics are the theta = theta_M = a_Mz = 0 section of 3D") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ang(-60.0 * kDeg, 60.0 * kDeg);
    std::uniform_real_distribution<double> acc(-90.0, 90.0);
    std::uniform_real_distribution<double> cmd(-500.0, 500.0);
    const SaturationParams sat;
    for (int i = 0; i < 500; ++i) {
        State3D s3;
        s3.r = 100.0 + 9900.0 * std::uniform_real_distribution<double>()(rng);
        s3.psi = ang(rng);
        s3.psi_m = ang(rng);
        s3.a_my = acc(rng);
        PlanarState sp{s3.r, s3.psi, s3.psi_m, s3.a_my, 0.0};
        const double by = cmd(rng);
        const Derivative3D d3 = derivatives3d(s3, 250.0, {by, 0.0, false}, sat);
        const DerivativePlanar dp = derivatives_planar(sp, 250.0, by, sat);
        CHECK(d3.r_dot == dp.r_dot);
        CHECK(d3.psi_dot == dp.theta_dot);
        CHECK(d3.psi_m_dot == dp.sigma_dot);
        CHECK(d3.a_my_dot == dp.a_my_dot);
        CHECK(d3.theta_dot == 0.0);
        CHECK(d3.theta_m_dot == 0.0);
        CHECK(d3.a_mz_dot == 0.0);
    }
}

}
