#include <doctest.h>

#include <cmath>

#include "bplat/conditions.hpp"
#include "bplat/dynamics.hpp"
#include "bplat/errors.hpp"
#include "oracles.hpp"

using namespace bplat;

namespace {

LatticeGeometry fig3_geom(int half = 60) {
  LatticeGeometry g;
  g.a = 2.0;
  g.b = 2.2;
  g.n_min = -half;
  g.n_max = half;
  return g;
}

DriveParams fig3_drive(double phi) { return DriveParams{1.0, 0.8, 30.0, 30.0, 2, phi}; }

// max population deviation between a trajectory and the two-site Rabi law
double rabi_population_deviation(const LatticeGeometry &g, const Trajectory &traj, double w) {
  double dev = 0.0;
  for (const WaveState &s : traj.states) {
    const double p0 = std::cos(w * s.t) * std::cos(w * s.t);
    const double p1 = std::sin(w * s.t) * std::sin(w * s.t);
    dev = std::max(dev, std::abs(std::norm(s.amps[g.index_of(0)]) - p0));
    dev = std::max(dev, std::abs(std::norm(s.amps[g.index_of(1)]) - p1));
  }
  return dev;
}

} // namespace

TEST_CASE("observables on simple states") {
  const LatticeGeometry g = fig3_geom(6);
  WaveState s = localized_state(g, 3, Picture::full);
  CHECK(populations(s)[g.index_of(3)] == 1.0);
  CHECK(center_of_mass(g, s) == doctest::Approx(site_position(g, 3)));
  CHECK(participation_ratio(s) == doctest::Approx(1.0));

  LatticeGeometry g1 = g;
  g1.a = 1.0;
  g1.b = 1.0;
  WaveState split = localized_state(g1, 0, Picture::averaged);
  split.amps[g1.index_of(0)] = 1.0 / std::sqrt(2.0);
  split.amps[g1.index_of(1)] = 1.0 / std::sqrt(2.0);
  CHECK(center_of_mass(g1, split) == doctest::Approx(0.5));
  CHECK(participation_ratio(split) == doctest::Approx(2.0));
}

TEST_CASE("switched-off coupling freezes the populations") {
  const LatticeGeometry g = fig3_geom(10);
  DriveParams d = fig3_drive(0.0);
  d.J0 = 0.0;
  d.deltaJ = 0.0; // diagonal Hamiltonian: phases rotate, populations do not
  WaveState s0 = localized_state(g, 0, Picture::full);
  s0.amps[g.index_of(0)] = complex(0.6, 0.0);
  s0.amps[g.index_of(2)] = complex(0.0, 0.8);
  const Trajectory traj = integrate_full(g, d, s0, 3.0, IntegratorConfig{});
  for (const WaveState &s : traj.states) {
    CHECK(std::norm(s.amps[g.index_of(0)]) == doctest::Approx(0.36).epsilon(1e-9));
    CHECK(std::norm(s.amps[g.index_of(2)]) == doctest::Approx(0.64).epsilon(1e-9));
  }
}

TEST_CASE("averaged integrator: frozen, Rabi, and oracle equivalence") {
  const LatticeGeometry g = fig3_geom(20);
  IntegratorConfig cfg;

  SUBCASE("zero rates hold the state") {
    const ParityRates rates = complete_parity_rates({complex(0, 0), complex(0, 0)});
    const WaveState s0 = localized_state(g, 0, Picture::averaged);
    const Trajectory traj = integrate_averaged(rates, g, s0, 10.0, cfg);
    CHECK(std::abs(traj.back().amps[g.index_of(0)] - complex(1, 0)) < 1e-12);
  }

  SUBCASE("dead backward bond reproduces the Rabi law") {
    const complex w1(0.1253242509735274, 0.0);
    const ParityRates rates = complete_parity_rates({w1, complex(0, 0)});
    const WaveState s0 = localized_state(g, 0, Picture::averaged);
    const Trajectory traj = integrate_averaged(rates, g, s0, 25.0, cfg);
    for (const WaveState &s : traj.states) {
      const RabiPair expect = rabi_solution(w1, +1, s.t);
      CHECK(std::abs(s.amps[g.index_of(0)] - expect.at_start) < 1e-9);
      CHECK(std::abs(s.amps[g.index_of(1)] - expect.at_neighbor) < 1e-9);
    }
  }

  SUBCASE("generic rates agree with the closed form") {
    const EffectiveRates r{complex(0.31, -0.22), complex(-0.17, 0.4)};
    const WaveState s0 = localized_state(g, 1, Picture::averaged);
    const Trajectory traj = integrate_averaged(complete_parity_rates(r), g, s0, 5.0, cfg);
    const auto closed = analytic_amplitudes(r, 1, 5.0, g);
    double dev = 0.0;
    for (int i = 0; i < g.site_count(); ++i) {
      dev = std::max(dev, std::abs(traj.back().amps[i] - closed[i]));
    }
    CHECK(dev < 1e-6);
    CHECK(std::abs(norm_sq(traj.back()) - 1.0) < 1e-10);
  }
}

TEST_CASE("full model reproduces the averaged Rabi oscillation at phi1") {
  const LatticeGeometry g = fig3_geom();
  const GapArguments gaps = gap_arguments(g, fig3_drive(0.0));
  const ConditionSolution sol =
      solve_condition(fig3_drive(0.0), gaps, ConditionKind::dl_backward);
  const DriveParams d = fig3_drive(sol.phi);

  const WaveState s0 = localized_state(g, 0, Picture::full);
  IntegratorConfig cfg;
  const Trajectory traj = integrate_full(g, d, s0, *sol.half_period, cfg);
  CHECK(rabi_population_deviation(g, traj, *sol.rabi_freq) < 0.05);
  // norm conservation along the way
  for (const WaveState &s : traj.states) {
    CHECK(std::abs(norm_sq(s) - 1.0) < 1e-8);
  }
}

TEST_CASE("gauge map ties the driven and transformed pictures together") {
  const LatticeGeometry g = fig3_geom(30);
  const DriveParams d = fig3_drive(1.9275090655132916);
  IntegratorConfig cfg;
  cfg.rel_tol = cfg.abs_tol = 1e-13;
  cfg.samples = 40;

  const Trajectory full = integrate_full(g, d, localized_state(g, 0, Picture::full), 20.0, cfg);
  const Trajectory tran =
      integrate_transformed(g, d, localized_state(g, 0, Picture::averaged), 20.0, cfg);
  double dev = 0.0;
  for (std::size_t s = 0; s < full.states.size(); ++s) {
    const WaveState mapped = to_full_picture(g, d, tran.states[s]);
    for (std::size_t i = 0; i < mapped.amps.size(); ++i) {
      dev = std::max(dev, std::abs(mapped.amps[i] - full.states[s].amps[i]));
    }
  }
  CHECK(dev < 1e-9);

  // the map is a pure phase: site populations match exactly
  const WaveState round = to_transformed_picture(g, d, to_full_picture(g, d, tran.back()));
  for (std::size_t i = 0; i < round.amps.size(); ++i) {
    CHECK(std::abs(round.amps[i] - tran.back().amps[i]) < 1e-14);
  }
}

TEST_CASE("deviation from the averaged model shrinks as omega grows") {
  // fixed gap arguments: E0/omega pinned while omega doubles
  const LatticeGeometry g = fig3_geom();
  double dev[2];
  int idx = 0;
  for (double omega : {30.0, 60.0}) {
    DriveParams d{1.0, 0.8, omega, omega, 2, 0.0};
    const GapArguments gaps = gap_arguments(g, d);
    const ConditionSolution sol = solve_condition(d, gaps, ConditionKind::dl_backward);
    d.phi = sol.phi;
    const Trajectory traj =
        integrate_full(g, d, localized_state(g, 0, Picture::full), *sol.half_period, {});
    dev[idx++] = rabi_population_deviation(g, traj, *sol.rabi_freq);
  }
  CHECK(dev[1] < dev[0]);
}

TEST_CASE("full model freezes at the Fig. 2 CDT phase") {
  const LatticeGeometry g{2.01717, 5.37977, -60, 60};
  const DriveParams d{1.0, 0.8, 30.0, 30.0, 2,
                      solve_cdt_phase(1.0, 0.8, 2, 2.01717, 5.37977)};
  const double t_end = 10.0 * 2.0 * M_PI / d.omega;
  const Trajectory traj = integrate_full(g, d, localized_state(g, 0, Picture::full), t_end, {});
  // measured floor 0.9886 at omega = 30; the deviation is the O(1/omega)
  // residue of the averaging, largest on the wide-gap bond
  for (const WaveState &s : traj.states) {
    CHECK(std::norm(s.amps[g.index_of(0)]) >= 0.985);
  }
}

TEST_CASE("hopeless tolerances trip the stiffness guard") {
  const LatticeGeometry g = fig3_geom(10);
  IntegratorConfig cfg;
  cfg.rel_tol = cfg.abs_tol = 1e-300;
  const WaveState s0 = localized_state(g, 0, Picture::full);
  CHECK_THROWS_AS(integrate_full(g, fig3_drive(0.0), s0, 1.0, cfg), StiffnessError);
}

TEST_CASE("time reversal returns the initial state") {
  const LatticeGeometry g = fig3_geom(30);
  const DriveParams d = fig3_drive(0.9);
  IntegratorConfig cfg;
  cfg.samples = 10;
  const WaveState s0 = localized_state(g, 0, Picture::full);
  const Trajectory fwd = integrate_full(g, d, s0, 7.0, cfg);
  const Trajectory bwd = integrate_full(g, d, fwd.back(), 0.0, cfg);
  double dev = 0.0;
  for (std::size_t i = 0; i < s0.amps.size(); ++i) {
    dev = std::max(dev, std::abs(bwd.back().amps[i] - s0.amps[i]));
  }
  CHECK(dev < 1e-7);
}

TEST_CASE("a window too small for the spread raises the edge-leak guard") {
  LatticeGeometry g = fig3_geom(4);
  DriveParams d = fig3_drive(0.0);
  d.E0 = 0.0; // untilted chain spreads ballistically
  const WaveState s0 = localized_state(g, 0, Picture::full);
  CHECK_THROWS_AS(integrate_full(g, d, s0, 10.0, IntegratorConfig{}), EdgeLeakError);
}

TEST_CASE("unnormalized initial states are rejected") {
  const LatticeGeometry g = fig3_geom(5);
  WaveState s0 = localized_state(g, 0, Picture::full);
  s0.amps[g.index_of(0)] = complex(2.0, 0.0);
  CHECK_THROWS_AS(integrate_full(g, fig3_drive(0.0), s0, 1.0, IntegratorConfig{}),
                  std::invalid_argument);
}
