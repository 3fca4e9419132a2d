#ifndef BPLAT_LATTICE_HPP
#define BPLAT_LATTICE_HPP

namespace bplat {

// Bipartite chain with alternating separations a (even bonds) and b (odd
// bonds), truncated to the site window [n_min, n_max]. Everything is
// dimensionless: energies in units of the reference frequency, lengths in
// units of the reference length.
struct LatticeGeometry {
  double a = 2.0;
  double b = 2.2;
  int n_min = -60;
  int n_max = 60;

  int site_count() const { return n_max - n_min + 1; }
  // Dense index of site n; throws std::out_of_range outside the window.
  int index_of(int n) const;
  bool contains(int n) const { return n >= n_min && n <= n_max; }
  void validate() const;
};

// Tilted drive with coupling modulation:
//   J(t) = J0 + deltaJ * cos(m*omega*t - phi)
//   E(t) = E0 * cos(omega*t)
struct DriveParams {
  double J0 = 1.0;
  double deltaJ = 0.0;
  double E0 = 0.0;
  double omega = 30.0;
  int m = 2; // photon resonance order; m = 0 degrades the cos term to a constant
  double phi = 0.0;

  void validate() const;
  DriveParams with_phi(double new_phi) const {
    DriveParams d = *this;
    d.phi = new_phi;
    return d;
  }
};

// Dimensionless tilt-per-gap arguments: delta_a = E0*a/omega, delta_b = E0*b/omega.
struct GapArguments {
  double delta_a = 0.0;
  double delta_b = 0.0;
};

GapArguments gap_arguments(const LatticeGeometry &geom, const DriveParams &drive);

// Site position x_n: n*(a+b)/2 for even n, (n+1)*a/2 + (n-1)*b/2 for odd n.
double site_position(const LatticeGeometry &geom, int n);

// (E0/omega) * (x_{n+1} - x_n); requires n and n+1 inside the window.
double gap_delta(const LatticeGeometry &geom, const DriveParams &drive, int n);

double coupling_at(const DriveParams &drive, double t);
double tilt_at(const DriveParams &drive, double t);

} // namespace bplat

#endif
