#ifndef BPLAT_EFFECTIVE_HPP
#define BPLAT_EFFECTIVE_HPP

#include <complex>
#include <vector>

#include "bplat/lattice.hpp"

namespace bplat {

using complex = std::complex<double>;

enum class SiteParity { even, odd };

inline SiteParity parity_of(int n) { return (n % 2 == 0) ? SiteParity::even : SiteParity::odd; }

// Drive-period average of J(t)*exp(i*delta*sin(omega*t)): the effective
// tunneling rate of one bond. Real for even m, complex for odd m; the branch
// is picked by integer parity, never numerically.
complex effective_rate(double J0, double deltaJ, int m, double phi, double delta);

// The pair of effective rates seen by a site of given parity: fwd multiplies
// A_{n+1}, bwd multiplies A_{n-1} in the averaged equation of motion.
struct EffectiveRates {
  complex fwd{0.0, 0.0};
  complex bwd{0.0, 0.0};
};

EffectiveRates rates_for_site(const DriveParams &drive, const GapArguments &gaps,
                              SiteParity parity);

// Both parities at once; the averaged generator needs them together.
struct ParityRates {
  EffectiveRates even_sites;
  EffectiveRates odd_sites;
};

ParityRates rates_by_parity(const DriveParams &drive, const GapArguments &gaps);

// Hermitian completion of an even-site rate pair: the odd-site rates implied
// by the bond structure (fwd/bwd swap with conjugation).
ParityRates complete_parity_rates(const EffectiveRates &even_sites);

// Momentum-space symbol f(k) = J+ cos k + i J- sin k of the averaged chain.
struct SymbolCoefficients {
  complex j_plus;
  complex j_minus;
};

SymbolCoefficients symbol_coefficients(const EffectiveRates &rates);
complex symbol_f(const EffectiveRates &rates, double k);

// Closed-form amplitudes of the averaged chain at time t for the initial
// state localized at start_site, evaluated on the window by trapezoid
// quadrature of the k-integral (spectrally convergent; the integrand is the
// sinc-regularized form, finite at zeros of the symbol).
//
// `even_rates` is the rate pair of even sites; odd sites follow by the
// Hermitian completion. Throws EdgeLeakError if the support reaches the
// window edge.
std::vector<complex> analytic_amplitudes(const EffectiveRates &even_rates, int start_site,
                                         double t, const LatticeGeometry &window,
                                         double edge_leak_tol = 1e-6, int k_points = 4096);

// Two-site Rabi amplitudes when the opposite bond is frozen: returns
// (A_N, A_{N+dir}) with A_N = cos(w t), A_{N+dir} = -i conj(F)/|F| sin(w t),
// w = |rate_active|. Throws InfeasibleError for a vanishing active rate
// (that would be the frozen-lattice case, not a Rabi pair).
struct RabiPair {
  complex at_start;
  complex at_neighbor;
};

RabiPair rabi_solution(complex rate_active, int direction, double t);

} // namespace bplat

#endif
