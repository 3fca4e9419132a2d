#ifndef BPLAT_TRANSPORT_HPP
#define BPLAT_TRANSPORT_HPP

#include <vector>

#include "bplat/conditions.hpp"
#include "bplat/dynamics.hpp"

namespace bplat {

struct PhaseSegment {
  double duration;
  double phi;
};

struct PhaseSchedule {
  std::vector<PhaseSegment> segments;
  double t_total = 0.0;
};

// Alternating ratchet schedule from the two DL solutions: each segment dwells
// for the bond's full-transfer time, half the population period pi/omega_R
// (dwelling a whole period would undo the hop). 2*cycles segments, phi1 first.
PhaseSchedule build_ratchet_schedule(const ConditionSolution &dl_backward_sol,
                                     const ConditionSolution &dl_forward_sol, int cycles);

enum class TransportModel { full, averaged };

struct SegmentSummary {
  int index;
  double phi;
  double duration;
  double t_end;
  int dominant_site;
  double dominant_population;
};

struct ProtocolSummary {
  std::vector<SegmentSummary> segments;
  double displacement = 0.0;
  double displacement_per_cycle = 0.0;
  // Largest |J| jump across a phase switch; the drive is only piecewise
  // continuous unless omega*T happens to match the phase step.
  double coupling_jump_max = 0.0;
  bool degraded = false; // some segment ended with < 0.5 population on target
};

struct ProtocolResult {
  Trajectory trajectory;
  ProtocolSummary summary;
};

// Run the schedule through the driven or averaged dynamics. Phase switches
// are instantaneous; amplitudes carry over unchanged and the stepper restarts
// at every switch. start_site parity must put the a-bond first (even site for
// the phi1-first schedule); the leftward variant is the mirrored schedule
// (phi2 first) from an even site.
ProtocolResult run_protocol(const LatticeGeometry &geom, const DriveParams &drive_base,
                            const PhaseSchedule &schedule, TransportModel model, int start_site,
                            const IntegratorConfig &cfg);

PhaseSchedule mirrored_schedule(const PhaseSchedule &schedule);

} // namespace bplat

#endif
