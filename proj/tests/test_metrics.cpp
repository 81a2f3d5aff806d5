#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "itguide/metrics.hpp"
#include "oracles.hpp"

using namespace itguide;
using oracle::kDeg;

namespace {

struct EffortRow {
    double tf, angle_deg, proposed;
};

constexpr std::array<EffortRow, 6> kReferenceEfforts{{{50.0, 10.0, 26453.596},
                                            {50.0, 20.0, 22142.337},
                                            {50.0, 30.0, 17622.982},
                                            {55.0, 10.0, 27745.7},
                                            {60.0, 10.0, 29834.925},
                                            {65.0, 10.0, 33995.707}}};

Scenario planar(double tf, double angle_deg) {
    Scenario sc;
    sc.mode = EngagementMode::Planar;
    sc.tf = tf;
    sc.sigma0 = angle_deg * kDeg;
    return sc;
}

TrajectoryLog constant_log(double a, double duration, int n) {
    TrajectoryLog log;
    for (int i = 0; i <= n; ++i) {
        LogRow row;
        row.t = duration * i / n;
        row.a_my = a;
        log.rows.push_back(row);
    }
    return log;
}

} // namespace

TEST_SUITE("metrics") {

TEST_CASE("control effort of simple signals") {
    CHECK(control_effort(constant_log(10.0, 2.0, 40)) == doctest::Approx(200.0).epsilon(1e-14));
    CHECK(control_effort(constant_log(0.0, 2.0, 40)) == 0.0);
}

TEST_CASE("nominal 3D metrics") {
    const Scenario sc;
    const GuidanceConfig cfg;
    const SimResult res = run_scenario(sc, cfg, {});
    const Metrics m = interception_metrics(res, sc, cfg);
    CHECK(m.status == RunStatus::Intercepted);
    CHECK(std::abs(m.impact_time_error) <= 0.1);
    CHECK(m.fov_violations == 0);
    CHECK(m.accel_violations == 0);
    CHECK(m.max_lead <= 60.0 * kDeg);
    CHECK(m.initial_lead / kDeg == doctest::Approx(14.106).epsilon(1e-4));
    CHECK(m.control_effort > 0.0);
}

TEST_CASE("terminal lead and acceleration on the nominal run") {
    const Scenario sc;
    const GuidanceConfig cfg;
    const Metrics m = interception_metrics(run_scenario(sc, cfg, {}), sc, cfg);
    CHECK(m.terminal_lead < 1.0 * kDeg);
    CHECK(m.terminal_ay < 0.5);
    CHECK(m.terminal_az < 0.5);
}

TEST_CASE("miss distance of a log that stays outside ten hit radii") {
    SimResult res;
    res.outcome.status = RunStatus::Timeout;
    res.outcome.miss_distance = 40.0;
    for (double r : {100.0, 60.0, 40.0, 55.0}) {
        LogRow row;
        row.t = static_cast<double>(res.log.rows.size());
        row.r = r;
        res.log.rows.push_back(row);
    }
    const Metrics m = interception_metrics(res, {}, {});
    CHECK(m.status == RunStatus::Timeout);
    CHECK(m.miss_distance == 40.0);
}

TEST_CASE("violation counters use per-row bounds") {
    SimResult res;
    for (double a : {50.0, 99.0, 98.1}) {
        LogRow row;
        row.t = static_cast<double>(res.log.rows.size());
        row.a_my = a;
        row.a_y_max = 98.1;
        row.sigma = a > 90.0 ? 61.0 * kDeg : 10.0 * kDeg;
        res.log.rows.push_back(row);
    }
    const Metrics m = interception_metrics(res, {}, {});
    CHECK(m.accel_violations == 1);
    CHECK(m.fov_violations == 2);
}

TEST_CASE("planar reference efforts within 10 percent") {
    std::vector<LabeledMetrics> runs;
    for (const auto &row : kReferenceEfforts) {
        const Scenario sc = planar(row.tf, row.angle_deg);
        const GuidanceConfig cfg;
        const SimResult res = run_scenario(sc, cfg, {});
        const Metrics m = interception_metrics(res, sc, cfg);
        CHECK(m.status == RunStatus::Intercepted);
        CHECK(std::abs(m.impact_time_error) <= 0.1);
        CHECK(std::abs(m.control_effort - row.proposed) <= 0.1 * row.proposed);
        runs.push_back({"tf" + std::to_string(static_cast<int>(row.tf)), m});
    }
    const auto report = compare_report(runs);
    REQUIRE(report.size() == 6);
    for (std::size_t i = 0; i < report.size(); ++i) {
        CHECK(report[i].desired_impact_time == doctest::Approx(kReferenceEfforts[i].tf));
        CHECK(report[i].initial_angle_deg == doctest::Approx(kReferenceEfforts[i].angle_deg));
        CHECK(report[i].control_effort == runs[i].metrics.control_effort);
    }
}

TEST_CASE("proposed law uses less effort than the unclipped baseline") {
    for (const auto &row : kReferenceEfforts) {
        const Scenario sc = planar(row.tf, row.angle_deg);
        GuidanceConfig proposed;
        GuidanceConfig baseline;
        baseline.law = GuidanceLaw::Baseline;
        const Metrics mp = interception_metrics(run_scenario(sc, proposed, {}), sc, proposed);
        const Metrics mb = interception_metrics(run_scenario(sc, baseline, {}), sc, baseline);
        CHECK(mp.control_effort < mb.control_effort);
        if (row.tf == 50.0 && row.angle_deg == 10.0) {
            CHECK(mb.max_ay > 98.1);
            CHECK(mp.max_ay <= 98.1);
        }
    }
}

TEST_CASE("compare report") {
    std::vector<LabeledMetrics> one{{"a", Metrics{}}};
    CHECK(compare_report(one).size() == 1);
    CHECK(compare_report(one)[0].label == "a");
    CHECK_THROWS_AS(compare_report(std::vector<LabeledMetrics>{}), std::invalid_argument);
}

TEST_CASE("effort is stable under log subsampling down to 10 ms") {
    const Scenario sc;
    const double full = control_effort(run_scenario(sc, {}, {}).log);
    for (int stride : {2, 5, 10}) {
        SimSettings st;
        st.log_stride = stride;
        const double sub = control_effort(run_scenario(sc, {}, st).log);
        CHECK(std::abs(sub - full) <= 1e-3 * full);
    }
}

TEST_CASE("effort is nondecreasing in prefix length") {
    const TrajectoryLog log = run_scenario({}, {}, {}).log;
    TrajectoryLog prefix;
    double prev = 0.0;
    for (std::size_t i = 0; i < log.rows.size(); i += 50) {
        prefix.rows.assign(log.rows.begin(), log.rows.begin() + static_cast<long>(i) + 1);
        const double e = control_effort(prefix);
        CHECK(e >= prev);
        prev = e;
    }
}

}
