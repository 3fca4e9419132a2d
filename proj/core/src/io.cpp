#include "bplat/io.hpp"

#include <charconv>

namespace bplat {

std::string fmt17(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_trajectory_csv(std::ostream &os, const LatticeGeometry &geom, const Trajectory &traj) {
  os << "t";
  for (int n = geom.n_min; n <= geom.n_max; ++n) {
    os << ",n=" << n;
  }
  os << ",norm,x_mean,pr\n";
  for (const WaveState &s : traj.states) {
    os << fmt17(s.t);
    for (const auto &a : s.amps) {
      os << ',' << fmt17(std::norm(a));
    }
    os << ',' << fmt17(norm_sq(s));
    os << ',' << fmt17(center_of_mass(geom, s));
    os << ',' << fmt17(participation_ratio(s));
    os << '\n';
  }
}

void write_scan_csv(std::ostream &os, const std::vector<ScanRow> &rows) {
  os << "phi,rate_fwd_re,rate_fwd_im,rate_bwd_re,rate_bwd_im,neg_rate_bwd_re\n";
  for (const ScanRow &r : rows) {
    os << fmt17(r.phi) << ',' << fmt17(r.fwd_re) << ',' << fmt17(r.fwd_im) << ','
       << fmt17(r.bwd_re) << ',' << fmt17(r.bwd_im) << ',' << fmt17(-r.bwd_re) << '\n';
  }
}

} // namespace bplat
