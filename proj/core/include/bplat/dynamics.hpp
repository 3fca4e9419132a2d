#ifndef BPLAT_DYNAMICS_HPP
#define BPLAT_DYNAMICS_HPP

#include <complex>
#include <vector>

#include "bplat/effective.hpp"
#include "bplat/lattice.hpp"

namespace bplat {

// Which set of amplitudes a state holds: c_n of the driven model or A_n of
// the gauge-transformed / averaged model. The gauge map is a pure phase, so
// populations coincide picture-by-picture.
enum class Picture { full, averaged };

struct WaveState {
  double t = 0.0;
  std::vector<complex> amps; // indexed n_min..n_max
  Picture picture = Picture::full;
};

WaveState localized_state(const LatticeGeometry &geom, int site, Picture picture);

struct IntegratorConfig {
  double dt_max = 0.0;   // 0 = automatic (2*pi/(40*omega) for the driven model)
  double rel_tol = 1e-10;
  double abs_tol = 1e-10;
  double edge_leak_tol = 1e-6;
  int samples = 200;     // sample intervals per requested span
};

struct Trajectory {
  std::vector<WaveState> states;
  const WaveState &front() const { return states.front(); }
  const WaveState &back() const { return states.back(); }
};

// Driven model, Eq.-of-motion i dc_n/dt = J(t)(c_{n+1}+c_{n-1}) - E0 cos(wt) x_n c_n,
// integrated with an adaptive embedded Runge-Kutta pair. Samples are taken at
// uniformly spaced times (cfg.samples intervals) or at caller-supplied times;
// t_end may precede state0.t (backward integration). Throws EdgeLeakError
// when probability reaches the window edge, StiffnessError on step underflow.
Trajectory integrate_full(const LatticeGeometry &geom, const DriveParams &drive,
                          const WaveState &state0, double t_end, const IntegratorConfig &cfg);
Trajectory integrate_full_at(const LatticeGeometry &geom, const DriveParams &drive,
                             const WaveState &state0, const std::vector<double> &sample_times,
                             const IntegratorConfig &cfg);

// Exact gauge-transformed model (no averaging):
// i dA_n/dt = J(t)(A_{n+1} e^{i d_n sin wt} + A_{n-1} e^{-i d_{n-1} sin wt}).
Trajectory integrate_transformed(const LatticeGeometry &geom, const DriveParams &drive,
                                 const WaveState &state0, double t_end,
                                 const IntegratorConfig &cfg);
Trajectory integrate_transformed_at(const LatticeGeometry &geom, const DriveParams &drive,
                                    const WaveState &state0,
                                    const std::vector<double> &sample_times,
                                    const IntegratorConfig &cfg);

// High-frequency averaged model with parity-dependent constant rates:
// i dA_n/dt = F_fwd(n) A_{n+1} + F_bwd(n) A_{n-1}.
Trajectory integrate_averaged(const ParityRates &rates, const LatticeGeometry &geom,
                              const WaveState &state0, double t_end,
                              const IntegratorConfig &cfg);
Trajectory integrate_averaged_at(const ParityRates &rates, const LatticeGeometry &geom,
                                 const WaveState &state0, const std::vector<double> &sample_times,
                                 const IntegratorConfig &cfg);

// Gauge map c_n = A_n exp(i E0 x_n sin(wt)/w) between the two pictures.
complex gauge_phase(const LatticeGeometry &geom, const DriveParams &drive, int n, double t);
WaveState to_full_picture(const LatticeGeometry &geom, const DriveParams &drive,
                          const WaveState &transformed);
WaveState to_transformed_picture(const LatticeGeometry &geom, const DriveParams &drive,
                                 const WaveState &full);

// Observables (states assumed normalized).
std::vector<double> populations(const WaveState &state);
double norm_sq(const WaveState &state);
double center_of_mass(const LatticeGeometry &geom, const WaveState &state);
double participation_ratio(const WaveState &state);

} // namespace bplat

#endif
