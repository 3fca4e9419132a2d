#include "bplat/transport.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bplat/errors.hpp"

namespace bplat {

namespace {

// Sampled times inside one segment (first point excluded; the previous
// segment, or the initial state, already owns it).
std::vector<double> segment_times(double t0, double t1, int samples) {
  const int n = std::max(samples, 1);
  std::vector<double> times(n);
  for (int i = 1; i <= n; ++i) {
    times[i - 1] = t0 + (t1 - t0) * static_cast<double>(i) / n;
  }
  times.back() = t1;
  return times;
}

int dominant_site(const LatticeGeometry &geom, const WaveState &s, double *pop) {
  int best = geom.n_min;
  double best_p = -1.0;
  for (int n = geom.n_min; n <= geom.n_max; ++n) {
    const double p = std::norm(s.amps[geom.index_of(n)]);
    if (p > best_p) {
      best_p = p;
      best = n;
    }
  }
  if (pop != nullptr) {
    *pop = best_p;
  }
  return best;
}

} // namespace

PhaseSchedule build_ratchet_schedule(const ConditionSolution &dl_backward_sol,
                                     const ConditionSolution &dl_forward_sol, int cycles) {
  if (cycles < 1) {
    throw ScheduleError("ratchet schedule needs at least one cycle");
  }
  if (dl_backward_sol.kind != ConditionKind::dl_backward ||
      dl_forward_sol.kind != ConditionKind::dl_forward) {
    throw ScheduleError("ratchet schedule needs a dl_backward solution (phi1) and a "
                        "dl_forward solution (phi2), in that order");
  }
  if (!dl_backward_sol.half_period || !dl_forward_sol.half_period) {
    throw ScheduleError("ratchet schedule: DL solutions carry no half-periods");
  }

  // Dwell for the transfer time pi/(2 w): the population period is
  // pi/w, and a full period would bring the particle back.
  const double dwell1 = 0.5 * *dl_backward_sol.half_period;
  const double dwell2 = 0.5 * *dl_forward_sol.half_period;

  PhaseSchedule sched;
  sched.segments.reserve(2 * cycles);
  for (int c = 0; c < cycles; ++c) {
    sched.segments.push_back({dwell1, dl_backward_sol.phi});
    sched.segments.push_back({dwell2, dl_forward_sol.phi});
  }
  for (const auto &seg : sched.segments) {
    sched.t_total += seg.duration;
  }
  return sched;
}

PhaseSchedule mirrored_schedule(const PhaseSchedule &schedule) {
  PhaseSchedule rev;
  rev.segments.assign(schedule.segments.rbegin(), schedule.segments.rend());
  rev.t_total = schedule.t_total;
  return rev;
}

ProtocolResult run_protocol(const LatticeGeometry &geom, const DriveParams &drive_base,
                            const PhaseSchedule &schedule, TransportModel model, int start_site,
                            const IntegratorConfig &cfg) {
  if (schedule.segments.empty()) {
    throw ScheduleError("empty phase schedule");
  }
  for (const auto &seg : schedule.segments) {
    if (!(seg.duration > 0.0)) {
      throw ScheduleError("schedule segment durations must be positive");
    }
  }

  const GapArguments gaps = gap_arguments(geom, drive_base);
  const Picture picture =
      (model == TransportModel::full) ? Picture::full : Picture::averaged;
  WaveState state = localized_state(geom, start_site, picture);

  ProtocolResult result;
  result.trajectory.states.push_back(state);
  const double x0 = center_of_mass(geom, state);

  double t = 0.0;
  double prev_phi = schedule.segments.front().phi;
  for (std::size_t is = 0; is < schedule.segments.size(); ++is) {
    const PhaseSegment &seg = schedule.segments[is];
    const DriveParams drive = drive_base.with_phi(seg.phi);
    if (is > 0) {
      const double jump =
          std::abs(coupling_at(drive, t) - coupling_at(drive_base.with_phi(prev_phi), t));
      result.summary.coupling_jump_max = std::max(result.summary.coupling_jump_max, jump);
    }

    const std::vector<double> times = segment_times(t, t + seg.duration, cfg.samples);
    Trajectory part;
    if (model == TransportModel::full) {
      part = integrate_full_at(geom, drive, state, times, cfg);
    } else {
      part = integrate_averaged_at(rates_by_parity(drive, gaps), geom, state, times, cfg);
    }
    state = part.back();
    for (auto &ws : part.states) {
      result.trajectory.states.push_back(std::move(ws));
    }

    SegmentSummary ss;
    ss.index = static_cast<int>(is);
    ss.phi = seg.phi;
    ss.duration = seg.duration;
    ss.t_end = times.back();
    ss.dominant_site = dominant_site(geom, state, &ss.dominant_population);
    if (ss.dominant_population < 0.5) {
      result.summary.degraded = true;
    }
    result.summary.segments.push_back(ss);

    t = times.back();
    prev_phi = seg.phi;
  }

  result.summary.displacement = center_of_mass(geom, state) - x0;
  const double cycles = 0.5 * static_cast<double>(schedule.segments.size());
  result.summary.displacement_per_cycle = result.summary.displacement / cycles;
  return result;
}

} // namespace bplat
