#ifndef BPLAT_IO_HPP
#define BPLAT_IO_HPP

#include <ostream>
#include <string>
#include <vector>

#include "bplat/dynamics.hpp"

namespace bplat {

// Shortest-exact decimal rendering of a double (17 significant digits,
// locale-independent); round-trips bit-exactly through strtod.
std::string fmt17(double v);

// Trajectory export: header `t,n=<n_min>,...,n=<n_max>,norm,x_mean,pr`,
// one row per sample with per-site populations.
void write_trajectory_csv(std::ostream &os, const LatticeGeometry &geom, const Trajectory &traj);

struct ScanRow {
  double phi;
  double fwd_re, fwd_im;
  double bwd_re, bwd_im;
};

// Phase-scan export: phi, rate_fwd_re, rate_fwd_im, rate_bwd_re, rate_bwd_im,
// neg_rate_bwd_re (the paper's dashed-curve convention).
void write_scan_csv(std::ostream &os, const std::vector<ScanRow> &rows);

} // namespace bplat

#endif
