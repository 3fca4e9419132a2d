#include "bplat/dynamics.hpp"

#include <algorithm>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bplat/errors.hpp"

namespace bplat {

namespace {

namespace ode = boost::numeric::odeint;

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr complex kImag{0.0, 1.0};

using state_vec = std::vector<double>; // interleaved re/im, layout-compatible with complex
using stepper_t = ode::runge_kutta_fehlberg78<state_vec>;
using controlled_t = ode::controlled_runge_kutta<stepper_t>;

const complex *as_complex(const state_vec &y) {
  return reinterpret_cast<const complex *>(y.data());
}
complex *as_complex(state_vec &y) { return reinterpret_cast<complex *>(y.data()); }

// Driven model: i dc/dt = J(t)(c_{n+1}+c_{n-1}) - E(t) x_n c_n.
struct FullSystem {
  DriveParams drive;
  std::vector<double> x;

  void operator()(const state_vec &y, state_vec &dydt, double t) const {
    dydt.resize(y.size());
    const complex *c = as_complex(y);
    complex *d = as_complex(dydt);
    const double jt = drive.J0 + drive.deltaJ * std::cos(drive.m * drive.omega * t - drive.phi);
    const double et = drive.E0 * std::cos(drive.omega * t);
    const int n = static_cast<int>(x.size());
    for (int i = 0; i < n; ++i) {
      complex h = -et * x[i] * c[i];
      if (i + 1 < n) {
        h += jt * c[i + 1];
      }
      if (i > 0) {
        h += jt * c[i - 1];
      }
      d[i] = -kImag * h;
    }
  }
};

// Exact transformed model: i dA/dt = J(t)(A_{n+1} e^{i d_n s} + A_{n-1} e^{-i d_{n-1} s}),
// s = sin(wt); the gap argument alternates with site parity.
struct TransformedSystem {
  DriveParams drive;
  GapArguments gaps;
  int n_min;
  int n_sites;

  void operator()(const state_vec &y, state_vec &dydt, double t) const {
    dydt.resize(y.size());
    const complex *c = as_complex(y);
    complex *d = as_complex(dydt);
    const double jt = drive.J0 + drive.deltaJ * std::cos(drive.m * drive.omega * t - drive.phi);
    const double s = std::sin(drive.omega * t);
    const complex pa = std::polar(1.0, gaps.delta_a * s);
    const complex pb = std::polar(1.0, gaps.delta_b * s);
    for (int i = 0; i < n_sites; ++i) {
      const bool even = ((n_min + i) % 2 == 0);
      const complex fw = even ? pa : pb;
      const complex bw = even ? std::conj(pb) : std::conj(pa);
      complex h{0.0, 0.0};
      if (i + 1 < n_sites) {
        h += fw * c[i + 1];
      }
      if (i > 0) {
        h += bw * c[i - 1];
      }
      d[i] = -kImag * jt * h;
    }
  }
};

// Averaged model with constant parity-dependent rates.
struct AveragedSystem {
  ParityRates rates;
  int n_min;
  int n_sites;

  void operator()(const state_vec &y, state_vec &dydt, double t) const {
    (void)t;
    dydt.resize(y.size());
    const complex *c = as_complex(y);
    complex *d = as_complex(dydt);
    for (int i = 0; i < n_sites; ++i) {
      const EffectiveRates &r =
          ((n_min + i) % 2 == 0) ? rates.even_sites : rates.odd_sites;
      complex h{0.0, 0.0};
      if (i + 1 < n_sites) {
        h += r.fwd * c[i + 1];
      }
      if (i > 0) {
        h += r.bwd * c[i - 1];
      }
      d[i] = -kImag * h;
    }
  }
};

void check_edge_leak(const std::vector<complex> &amps, double tol, double t) {
  const int n = static_cast<int>(amps.size());
  double edge = 0.0;
  for (int i = 0; i < 3 && i < n; ++i) {
    edge += std::norm(amps[i]) + std::norm(amps[n - 1 - i]);
  }
  if (edge > tol) {
    throw EdgeLeakError("probability " + std::to_string(edge) + " reached the window edge at t = " +
                        std::to_string(t) + "; enlarge the window");
  }
}

std::vector<double> uniform_times(double t0, double t1, int samples) {
  const int n = std::max(samples, 1);
  std::vector<double> times(n + 1);
  for (int i = 0; i <= n; ++i) {
    times[i] = t0 + (t1 - t0) * static_cast<double>(i) / n;
  }
  times.back() = t1;
  return times;
}

// Advance y from t to t_target (either direction), dt carries the suggested
// magnitude across calls.
template <class System>
void advance_to(controlled_t &ctrl, const System &sys, state_vec &y, double &t, double t_target,
             double &dt, double dt_max) {
  const double dir = (t_target >= t) ? 1.0 : -1.0;
  int failures = 0;
  while (dir * (t_target - t) > 1e-14 * std::max(1.0, std::abs(t_target))) {
    double h = dir * std::min({dt, dt_max, std::abs(t_target - t)});
    const auto res = ctrl.try_step(sys, y, t, h);
    dt = std::abs(h);
    if (res == ode::fail) {
      if (++failures > 500 || dt < 1e-15 * std::max(1.0, std::abs(t))) {
        throw StiffnessError("step size underflow at t = " + std::to_string(t));
      }
    } else {
      failures = 0;
    }
  }
  t = t_target;
}

template <class System>
Trajectory run_integration(const System &sys, const WaveState &state0,
                           const std::vector<double> &sample_times, const IntegratorConfig &cfg,
                           double dt_max) {
  if (sample_times.empty()) {
    throw std::invalid_argument("integration needs at least one sample time");
  }
  if (std::abs(norm_sq(state0) - 1.0) > 1e-6) {
    throw std::invalid_argument("initial state is not normalized");
  }

  state_vec y(2 * state0.amps.size());
  std::copy_n(reinterpret_cast<const double *>(state0.amps.data()), y.size(), y.data());

  controlled_t ctrl = ode::make_controlled<stepper_t>(cfg.abs_tol, cfg.rel_tol);
  double t = state0.t;
  double dt = std::min(dt_max, std::max(1e-6, std::abs(sample_times.back() - t) / 1000.0));

  Trajectory traj;
  traj.states.reserve(sample_times.size());
  for (double ts : sample_times) {
    if (ts != t) {
      advance_to(ctrl, sys, y, t, ts, dt, dt_max);
    }
    WaveState s;
    s.t = ts;
    s.picture = state0.picture;
    s.amps.assign(as_complex(y), as_complex(y) + state0.amps.size());
    check_edge_leak(s.amps, cfg.edge_leak_tol, ts);
    traj.states.push_back(std::move(s));
  }
  return traj;
}

double full_dt_max(const DriveParams &drive, const IntegratorConfig &cfg) {
  const double cap = 2.0 * kPi / (40.0 * drive.omega);
  return (cfg.dt_max > 0.0) ? std::min(cfg.dt_max, cap) : cap;
}

double averaged_dt_max(const IntegratorConfig &cfg) {
  return (cfg.dt_max > 0.0) ? cfg.dt_max : std::numeric_limits<double>::max();
}

} // namespace

WaveState localized_state(const LatticeGeometry &geom, int site, Picture picture) {
  WaveState s;
  s.t = 0.0;
  s.picture = picture;
  s.amps.assign(geom.site_count(), complex(0.0, 0.0));
  s.amps[geom.index_of(site)] = complex(1.0, 0.0);
  return s;
}

Trajectory integrate_full(const LatticeGeometry &geom, const DriveParams &drive,
                          const WaveState &state0, double t_end, const IntegratorConfig &cfg) {
  return integrate_full_at(geom, drive, state0, uniform_times(state0.t, t_end, cfg.samples), cfg);
}

Trajectory integrate_full_at(const LatticeGeometry &geom, const DriveParams &drive,
                             const WaveState &state0, const std::vector<double> &sample_times,
                             const IntegratorConfig &cfg) {
  geom.validate();
  drive.validate();
  FullSystem sys;
  sys.drive = drive;
  sys.x.resize(geom.site_count());
  for (int n = geom.n_min; n <= geom.n_max; ++n) {
    sys.x[geom.index_of(n)] = site_position(geom, n);
  }
  return run_integration(sys, state0, sample_times, cfg, full_dt_max(drive, cfg));
}

Trajectory integrate_transformed(const LatticeGeometry &geom, const DriveParams &drive,
                                 const WaveState &state0, double t_end,
                                 const IntegratorConfig &cfg) {
  return integrate_transformed_at(geom, drive, state0, uniform_times(state0.t, t_end, cfg.samples),
                                  cfg);
}

Trajectory integrate_transformed_at(const LatticeGeometry &geom, const DriveParams &drive,
                                    const WaveState &state0,
                                    const std::vector<double> &sample_times,
                                    const IntegratorConfig &cfg) {
  geom.validate();
  drive.validate();
  TransformedSystem sys{drive, gap_arguments(geom, drive), geom.n_min, geom.site_count()};
  return run_integration(sys, state0, sample_times, cfg, full_dt_max(drive, cfg));
}

Trajectory integrate_averaged(const ParityRates &rates, const LatticeGeometry &geom,
                              const WaveState &state0, double t_end,
                              const IntegratorConfig &cfg) {
  return integrate_averaged_at(rates, geom, state0, uniform_times(state0.t, t_end, cfg.samples),
                               cfg);
}

Trajectory integrate_averaged_at(const ParityRates &rates, const LatticeGeometry &geom,
                                 const WaveState &state0, const std::vector<double> &sample_times,
                                 const IntegratorConfig &cfg) {
  geom.validate();
  AveragedSystem sys{rates, geom.n_min, geom.site_count()};
  return run_integration(sys, state0, sample_times, cfg, averaged_dt_max(cfg));
}

complex gauge_phase(const LatticeGeometry &geom, const DriveParams &drive, int n, double t) {
  return std::polar(1.0, drive.E0 / drive.omega * site_position(geom, n) *
                             std::sin(drive.omega * t));
}

WaveState to_full_picture(const LatticeGeometry &geom, const DriveParams &drive,
                          const WaveState &transformed) {
  WaveState s = transformed;
  s.picture = Picture::full;
  for (int n = geom.n_min; n <= geom.n_max; ++n) {
    s.amps[geom.index_of(n)] *= gauge_phase(geom, drive, n, transformed.t);
  }
  return s;
}

WaveState to_transformed_picture(const LatticeGeometry &geom, const DriveParams &drive,
                                 const WaveState &full) {
  WaveState s = full;
  s.picture = Picture::averaged;
  for (int n = geom.n_min; n <= geom.n_max; ++n) {
    s.amps[geom.index_of(n)] *= std::conj(gauge_phase(geom, drive, n, full.t));
  }
  return s;
}

std::vector<double> populations(const WaveState &state) {
  std::vector<double> p(state.amps.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = std::norm(state.amps[i]);
  }
  return p;
}

double norm_sq(const WaveState &state) {
  double n = 0.0;
  for (const auto &a : state.amps) {
    n += std::norm(a);
  }
  return n;
}

double center_of_mass(const LatticeGeometry &geom, const WaveState &state) {
  double x = 0.0;
  for (int n = geom.n_min; n <= geom.n_max; ++n) {
    x += std::norm(state.amps[geom.index_of(n)]) * site_position(geom, n);
  }
  return x;
}

double participation_ratio(const WaveState &state) {
  double p2 = 0.0;
  for (const auto &a : state.amps) {
    p2 += std::norm(a) * std::norm(a);
  }
  return 1.0 / p2;
}

} // namespace bplat
