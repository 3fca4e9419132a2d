#include <doctest.h>

#include <cmath>

#include "bplat/errors.hpp"
#include "bplat/transport.hpp"

using namespace bplat;

namespace {

LatticeGeometry fig3_geom(int half = 60) { return LatticeGeometry{2.0, 2.2, -half, half}; }
DriveParams fig3_drive() { return DriveParams{1.0, 0.8, 30.0, 30.0, 2, 0.0}; }

struct Fig3Solutions {
  ConditionSolution backward; // phi1
  ConditionSolution forward;  // phi2
};

Fig3Solutions solve_fig3() {
  const DriveParams d = fig3_drive();
  const GapArguments gaps = gap_arguments(fig3_geom(), d);
  return {solve_condition(d, gaps, ConditionKind::dl_backward),
          solve_condition(d, gaps, ConditionKind::dl_forward)};
}

} // namespace

TEST_CASE("build_ratchet_schedule") {
  const Fig3Solutions sols = solve_fig3();

  const PhaseSchedule one = build_ratchet_schedule(sols.backward, sols.forward, 1);
  REQUIRE(one.segments.size() == 2);
  CHECK(one.segments[0].phi == sols.backward.phi);
  CHECK(one.segments[1].phi == sols.forward.phi);
  // dwell = transfer time = half the population period
  CHECK(one.segments[0].duration == doctest::Approx(0.5 * *sols.backward.half_period));
  CHECK(one.segments[1].duration == doctest::Approx(0.5 * *sols.forward.half_period));
  CHECK(one.t_total == doctest::Approx(one.segments[0].duration + one.segments[1].duration));

  const PhaseSchedule three = build_ratchet_schedule(sols.backward, sols.forward, 3);
  CHECK(three.segments.size() == 6);
  CHECK(three.t_total == doctest::Approx(3.0 * one.t_total));

  CHECK_THROWS_AS(build_ratchet_schedule(sols.backward, sols.forward, 0), ScheduleError);
  CHECK_THROWS_AS(build_ratchet_schedule(sols.forward, sols.backward, 1), ScheduleError);
}

TEST_CASE("averaged ratchet walks one unit cell per cycle") {
  const Fig3Solutions sols = solve_fig3();
  const LatticeGeometry g = fig3_geom();
  const PhaseSchedule sched = build_ratchet_schedule(sols.backward, sols.forward, 1);

  const ProtocolResult res =
      run_protocol(g, fig3_drive(), sched, TransportModel::averaged, 0, IntegratorConfig{});
  CHECK(res.summary.displacement == doctest::Approx(4.2).epsilon(1e-9));
  CHECK_FALSE(res.summary.degraded);
  REQUIRE(res.summary.segments.size() == 2);
  CHECK(res.summary.segments[0].dominant_site == 1);
  CHECK(res.summary.segments[1].dominant_site == 2);
  // exact half-Rabi swaps: transfer infidelity below 1e-8
  for (const SegmentSummary &ss : res.summary.segments) {
    CHECK(1.0 - ss.dominant_population < 1e-8);
  }
  // switches never touch the state: norm is conserved across the whole run
  for (const WaveState &s : res.trajectory.states) {
    CHECK(std::abs(norm_sq(s) - 1.0) < 1e-8);
  }
}

TEST_CASE("doubling the cycle count doubles the displacement") {
  const Fig3Solutions sols = solve_fig3();
  const LatticeGeometry g = fig3_geom();
  const IntegratorConfig cfg;
  const ProtocolResult r1 = run_protocol(g, fig3_drive(),
                                         build_ratchet_schedule(sols.backward, sols.forward, 1),
                                         TransportModel::averaged, 0, cfg);
  const ProtocolResult r2 = run_protocol(g, fig3_drive(),
                                         build_ratchet_schedule(sols.backward, sols.forward, 2),
                                         TransportModel::averaged, 0, cfg);
  CHECK(r2.summary.displacement ==
        doctest::Approx(2.0 * r1.summary.displacement).epsilon(1e-6));
  CHECK(r1.summary.displacement_per_cycle ==
        doctest::Approx(r2.summary.displacement_per_cycle).epsilon(1e-6));
}

TEST_CASE("mirrored schedule transports leftward") {
  const Fig3Solutions sols = solve_fig3();
  const LatticeGeometry g = fig3_geom();
  const PhaseSchedule sched = build_ratchet_schedule(sols.backward, sols.forward, 2);
  const PhaseSchedule mirror = mirrored_schedule(sched);

  const ProtocolResult right =
      run_protocol(g, fig3_drive(), sched, TransportModel::averaged, 0, IntegratorConfig{});
  const ProtocolResult left =
      run_protocol(g, fig3_drive(), mirror, TransportModel::averaged, 0, IntegratorConfig{});
  CHECK(left.summary.displacement ==
        doctest::Approx(-right.summary.displacement).epsilon(1e-8));
}

TEST_CASE("a schedule parked at the CDT phase goes nowhere") {
  // matched pair geometry: gaps (2.01717, 5.37977) with E0 = omega
  const LatticeGeometry g{2.01717, 5.37977, -60, 60};
  const DriveParams d = fig3_drive();
  const double phi0 = solve_cdt_phase(d.J0, d.deltaJ, d.m, 2.01717, 5.37977);

  PhaseSchedule sched;
  sched.segments = {{10.0, phi0}, {10.0, phi0}};
  sched.t_total = 20.0;
  const ProtocolResult res =
      run_protocol(g, d, sched, TransportModel::averaged, 0, IntegratorConfig{});
  CHECK(std::abs(res.summary.displacement) < 1e-3);
}

TEST_CASE("full-model ratchet tracks the averaged prediction") {
  const Fig3Solutions sols = solve_fig3();
  const LatticeGeometry g = fig3_geom();
  const PhaseSchedule sched = build_ratchet_schedule(sols.backward, sols.forward, 1);

  const ProtocolResult res =
      run_protocol(g, fig3_drive(), sched, TransportModel::full, 0, IntegratorConfig{});
  CHECK(std::abs(res.summary.displacement - 4.2) < 0.42);
  for (const WaveState &s : res.trajectory.states) {
    CHECK(std::abs(norm_sq(s) - 1.0) < 1e-8);
  }
}

TEST_CASE("run_protocol rejects broken schedules") {
  const LatticeGeometry g = fig3_geom(10);
  CHECK_THROWS_AS(
      run_protocol(g, fig3_drive(), PhaseSchedule{}, TransportModel::averaged, 0, {}),
      ScheduleError);
  PhaseSchedule bad;
  bad.segments = {{-1.0, 0.5}};
  CHECK_THROWS_AS(run_protocol(g, fig3_drive(), bad, TransportModel::averaged, 0, {}),
                  ScheduleError);
}
