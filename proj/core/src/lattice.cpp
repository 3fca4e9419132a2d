#include "bplat/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bplat {

int LatticeGeometry::index_of(int n) const {
  if (!contains(n)) {
    throw std::out_of_range("site index " + std::to_string(n) + " outside window [" +
                            std::to_string(n_min) + ", " + std::to_string(n_max) + "]");
  }
  return n - n_min;
}

void LatticeGeometry::validate() const {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("lattice separations must be positive");
  }
  if (!(n_min < 0 && n_max > 0)) {
    throw std::invalid_argument("site window must contain the origin strictly inside");
  }
}

void DriveParams::validate() const {
  if (!(omega > 0.0)) {
    throw std::invalid_argument("drive frequency omega must be positive");
  }
  if (m < 0) {
    throw std::invalid_argument("resonance order m must be non-negative");
  }
}

GapArguments gap_arguments(const LatticeGeometry &geom, const DriveParams &drive) {
  const double scale = drive.E0 / drive.omega;
  return {scale * geom.a, scale * geom.b};
}

double site_position(const LatticeGeometry &geom, int n) {
  geom.index_of(n); // range check
  // Even and odd sites interleave the two separations; x_0 = 0.
  if (n % 2 == 0) {
    return 0.5 * n * (geom.a + geom.b);
  }
  return 0.5 * (n + 1) * geom.a + 0.5 * (n - 1) * geom.b;
}

double gap_delta(const LatticeGeometry &geom, const DriveParams &drive, int n) {
  const double dx = site_position(geom, n + 1) - site_position(geom, n);
  return drive.E0 / drive.omega * dx;
}

double coupling_at(const DriveParams &drive, double t) {
  return drive.J0 + drive.deltaJ * std::cos(drive.m * drive.omega * t - drive.phi);
}

double tilt_at(const DriveParams &drive, double t) {
  return drive.E0 * std::cos(drive.omega * t);
}

} // namespace bplat
