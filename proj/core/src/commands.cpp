#include "bplat/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "bplat/conditions.hpp"
#include "bplat/errors.hpp"
#include "bplat/io.hpp"

namespace bplat {

namespace {

using nlohmann::json;

int guarded(const std::function<void()> &body) {
  try {
    body();
    return kExitOk;
  } catch (const EdgeLeakError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIntegrator;
  } catch (const StiffnessError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIntegrator;
  } catch (const InfeasibleError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const ScheduleError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const ConfigError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

// Data goes to the output file, or to stdout when no path was given.
void emit(const std::string &output_path, const std::string &payload) {
  if (output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    throw ConfigError("cannot open output file '" + output_path + "'");
  }
  out << payload;
}

json rates_to_json(const EffectiveRates &r) {
  return json{{"fwd", {r.fwd.real(), r.fwd.imag()}}, {"bwd", {r.bwd.real(), r.bwd.imag()}}};
}

const char *kind_name(ConditionKind k) {
  switch (k) {
  case ConditionKind::cdt:
    return "cdt";
  case ConditionKind::dl_forward:
    return "dl-forward";
  case ConditionKind::dl_backward:
    return "dl-backward";
  case ConditionKind::instability:
    return "instability";
  }
  return "?";
}

std::string summary_json_path(const std::string &output_path) {
  const auto dot = output_path.find_last_of('.');
  const auto slash = output_path.find_last_of('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
    return output_path.substr(0, dot) + ".summary.json";
  }
  return output_path + ".summary.json";
}

} // namespace

int cmd_simulate(const RunConfig &cfg, SimModel model, const std::string &output_path) {
  return guarded([&] {
    const LatticeGeometry &geom = cfg.geometry;
    const GapArguments gaps = gap_arguments(geom, cfg.drive);
    const int start = cfg.simulate.start_site;
    const double t_end = cfg.simulate.t_end;

    Trajectory traj;
    if (model == SimModel::full) {
      const WaveState s0 = localized_state(geom, start, Picture::full);
      traj = integrate_full(geom, cfg.drive, s0, t_end, cfg.integrator);
    } else if (model == SimModel::averaged) {
      const WaveState s0 = localized_state(geom, start, Picture::averaged);
      traj = integrate_averaged(rates_by_parity(cfg.drive, gaps), geom, s0, t_end, cfg.integrator);
    } else {
      const EffectiveRates rates = rates_for_site(cfg.drive, gaps, SiteParity::even);
      const int samples = std::max(cfg.integrator.samples, 1);
      for (int i = 0; i <= samples; ++i) {
        const double t = t_end * static_cast<double>(i) / samples;
        WaveState s;
        s.t = t;
        s.picture = Picture::averaged;
        s.amps = analytic_amplitudes(rates, start, t, geom, cfg.integrator.edge_leak_tol);
        traj.states.push_back(std::move(s));
      }
    }

    std::ostringstream os;
    write_trajectory_csv(os, geom, traj);
    emit(output_path, os.str());
  });
}

int cmd_scan_phase(const RunConfig &cfg, const std::string &output_path, int workers) {
  return guarded([&] {
    const int steps = cfg.scan.steps;
    if (steps < 2) {
      throw ConfigError("scan.steps must be >= 2");
    }
    const GapArguments gaps = gap_arguments(cfg.geometry, cfg.drive);
    std::vector<ScanRow> rows(steps);

    const auto fill = [&](int begin, int end) {
      for (int i = begin; i < end; ++i) {
        const double phi =
            cfg.scan.phi_min + (cfg.scan.phi_max - cfg.scan.phi_min) * i / (steps - 1.0);
        const EffectiveRates r =
            rates_for_site(cfg.drive.with_phi(phi), gaps, SiteParity::even);
        rows[i] = {phi, r.fwd.real(), r.fwd.imag(), r.bwd.real(), r.bwd.imag()};
      }
    };

    const int nw = std::max(1, workers);
    if (nw == 1) {
      fill(0, steps);
    } else {
      // Deterministic by construction: each worker owns an index range and
      // rows are emitted in index order afterwards.
      std::vector<std::thread> pool;
      const int chunk = (steps + nw - 1) / nw;
      for (int w = 0; w < nw; ++w) {
        const int begin = w * chunk;
        const int end = std::min(steps, begin + chunk);
        if (begin < end) {
          pool.emplace_back(fill, begin, end);
        }
      }
      for (auto &th : pool) {
        th.join();
      }
    }

    std::ostringstream os;
    write_scan_csv(os, rows);
    emit(output_path, os.str());
  });
}

int cmd_solve(const RunConfig &cfg, const std::string &kind, const std::string &output_path) {
  return guarded([&] {
    const GapArguments gaps = cfg.solve_gaps();
    std::optional<std::pair<double, double>> bracket;
    if (cfg.solve.bracket_lo && cfg.solve.bracket_hi) {
      bracket = std::make_pair(*cfg.solve.bracket_lo, *cfg.solve.bracket_hi);
    }

    json out;
    if (kind == "cdt-delta-pair") {
      const CdtDeltaPair pair =
          solve_cdt_delta_pair(cfg.drive.J0, cfg.drive.deltaJ, cfg.drive.m, gaps.delta_a,
                               cfg.solve.pair_bracket_lo, cfg.solve.pair_bracket_hi);
      const GapArguments solved{pair.delta_a, pair.delta_b};
      out["kind"] = kind;
      out["phi"] = pair.phi0;
      out["delta_a"] = pair.delta_a;
      out["delta_b"] = pair.delta_b;
      out["rates"] =
          rates_to_json(rates_for_site(cfg.drive.with_phi(pair.phi0), solved, SiteParity::even));
    } else {
      ConditionKind ck;
      if (kind == "cdt") {
        ck = ConditionKind::cdt;
      } else if (kind == "dl-forward") {
        ck = ConditionKind::dl_forward;
      } else if (kind == "dl-backward") {
        ck = ConditionKind::dl_backward;
      } else if (kind == "instability") {
        ck = ConditionKind::instability;
      } else {
        throw ConfigError("unknown solve kind '" + kind + "'");
      }
      const ConditionSolution sol = solve_condition(cfg.drive, gaps, ck, bracket);
      out["kind"] = kind_name(sol.kind);
      out["phi"] = sol.phi;
      out["mirror_phi"] = sol.mirror_phi;
      out["rates"] = rates_to_json(sol.rates_at_phi);
      if (sol.rabi_freq) {
        out["rabi_freq"] = *sol.rabi_freq;
        out["half_period"] = *sol.half_period;
      }
      out["delta_a"] = gaps.delta_a;
      out["delta_b"] = gaps.delta_b;
    }
    emit(output_path, out.dump(2) + "\n");
  });
}

int cmd_transport(const RunConfig &cfg, int cycles, TransportModel model,
                  const std::string &output_path) {
  return guarded([&] {
    if (cycles < 1) {
      throw ConfigError("transport cycles must be >= 1");
    }
    if (cfg.transport.start_site % 2 != 0) {
      throw ConfigError("transport.start_site must be even (the a-bond leads the schedule)");
    }
    const GapArguments gaps = gap_arguments(cfg.geometry, cfg.drive);
    const ConditionSolution sol1 = solve_condition(cfg.drive, gaps, ConditionKind::dl_backward);
    const ConditionSolution sol2 = solve_condition(cfg.drive, gaps, ConditionKind::dl_forward);
    PhaseSchedule schedule = build_ratchet_schedule(sol1, sol2, cycles);
    if (cfg.transport.direction == "left") {
      schedule = mirrored_schedule(schedule);
    }

    const ProtocolResult result = run_protocol(cfg.geometry, cfg.drive, schedule, model,
                                               cfg.transport.start_site, cfg.integrator);
    if (result.summary.degraded) {
      std::cerr << "warning: protocol degraded (a segment ended with < 0.5 population "
                   "on its target site)\n";
    }

    json summary;
    summary["phi1"] = sol1.phi;
    summary["phi2"] = sol2.phi;
    summary["T1"] = *sol1.half_period;
    summary["T2"] = *sol2.half_period;
    summary["displacement"] = result.summary.displacement;
    summary["displacement_per_cycle"] = result.summary.displacement_per_cycle;
    summary["cycles"] = cycles;
    summary["direction"] = cfg.transport.direction;
    summary["coupling_jump_max"] = result.summary.coupling_jump_max;
    summary["degraded"] = result.summary.degraded;
    json segs = json::array();
    for (const SegmentSummary &ss : result.summary.segments) {
      segs.push_back({{"index", ss.index},
                      {"phi", ss.phi},
                      {"duration", ss.duration},
                      {"t_end", ss.t_end},
                      {"dominant_site", ss.dominant_site},
                      {"dominant_population", ss.dominant_population}});
    }
    summary["segments"] = segs;

    if (output_path.empty()) {
      std::cout << summary.dump(2) << "\n";
    } else {
      std::ostringstream os;
      write_trajectory_csv(os, cfg.geometry, result.trajectory);
      emit(output_path, os.str());
      emit(summary_json_path(output_path), summary.dump(2) + "\n");
    }
  });
}

} // namespace bplat
