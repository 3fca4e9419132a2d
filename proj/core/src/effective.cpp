#include "bplat/effective.hpp"

#include <cmath>
#include <stdexcept>

#include "bplat/bessel.hpp"
#include "bplat/errors.hpp"

namespace bplat {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr complex kImag{0.0, 1.0};

// sin(x)/x with the finite limit at the origin.
double sinc(double x) {
  if (std::abs(x) < 1e-8) {
    return 1.0 - x * x / 6.0;
  }
  return std::sin(x) / x;
}
} // namespace

complex effective_rate(double J0, double deltaJ, int m, double phi, double delta) {
  const double base = J0 * bessel_j(0, delta);
  const double jm = bessel_j(m, delta);
  if (m % 2 == 0) {
    return complex(base + deltaJ * std::cos(phi) * jm, 0.0);
  }
  return complex(base, deltaJ * std::sin(phi) * jm);
}

EffectiveRates rates_for_site(const DriveParams &drive, const GapArguments &gaps,
                              SiteParity parity) {
  EffectiveRates r;
  if (parity == SiteParity::even) {
    r.fwd = effective_rate(drive.J0, drive.deltaJ, drive.m, drive.phi, gaps.delta_a);
    r.bwd = effective_rate(drive.J0, drive.deltaJ, drive.m, drive.phi, -gaps.delta_b);
  } else {
    r.fwd = effective_rate(drive.J0, drive.deltaJ, drive.m, drive.phi, gaps.delta_b);
    r.bwd = effective_rate(drive.J0, drive.deltaJ, drive.m, drive.phi, -gaps.delta_a);
  }
  return r;
}

ParityRates rates_by_parity(const DriveParams &drive, const GapArguments &gaps) {
  return {rates_for_site(drive, gaps, SiteParity::even),
          rates_for_site(drive, gaps, SiteParity::odd)};
}

ParityRates complete_parity_rates(const EffectiveRates &even_sites) {
  // Hermiticity of the chain fixes the odd-site pair: the bond n -> n+1 and
  // its reverse carry conjugate coefficients.
  ParityRates r;
  r.even_sites = even_sites;
  r.odd_sites.fwd = std::conj(even_sites.bwd);
  r.odd_sites.bwd = std::conj(even_sites.fwd);
  return r;
}

SymbolCoefficients symbol_coefficients(const EffectiveRates &rates) {
  return {rates.fwd + rates.bwd, rates.fwd - rates.bwd};
}

complex symbol_f(const EffectiveRates &rates, double k) {
  const auto [j_plus, j_minus] = symbol_coefficients(rates);
  return j_plus * std::cos(k) + kImag * j_minus * std::sin(k);
}

std::vector<complex> analytic_amplitudes(const EffectiveRates &even_rates, int start_site,
                                         double t, const LatticeGeometry &window,
                                         double edge_leak_tol, int k_points) {
  window.index_of(start_site); // must be inside the window
  const complex Ff = even_rates.fwd;
  const complex Fb = even_rates.bwd;

  // Initial-slope coefficients of the Fourier-mode solution. Differentiating
  // the averaged equation at t=0 for the state |N> puts the conjugated bond
  // rates of site N next to e^{-i(N+-1)k}; for even m (real rates) this is
  // the same thing as the unconjugated pair.
  complex Bf, Bb;
  if (start_site % 2 == 0) {
    Bf = std::conj(Ff);
    Bb = std::conj(Fb);
  } else {
    Bf = Fb;
    Bb = Ff;
  }

  const int n_sites = window.site_count();
  std::vector<complex> out(n_sites, complex(0.0, 0.0));

  const double dk = 2.0 * kPi / k_points;
  for (int j = 0; j < k_points; ++j) {
    const double k = -kPi + j * dk;
    const complex eik = std::polar(1.0, k);
    const complex emik = std::conj(eik);
    const complex f = Ff * eik + Fb * emik;
    const double w = std::abs(f);
    const double c = std::cos(w * t);
    const double s = t * sinc(w * t);
    // A(k,t) = e^{-iNk} [cos(|f|t) - i t sinc(|f|t) (Bf e^{-ik} + Bb e^{ik})]
    const complex mode = std::polar(1.0, -start_site * k) * (c - kImag * s * (Bf * emik + Bb * eik));
    // accumulate (1/K) sum_j mode * e^{ink}
    complex phase = std::polar(1.0, window.n_min * k);
    for (int i = 0; i < n_sites; ++i) {
      out[i] += mode * phase;
      phase *= eik;
    }
  }
  const double inv_k = 1.0 / static_cast<double>(k_points);
  for (auto &v : out) {
    v *= inv_k;
  }

  double edge = 0.0;
  for (int i = 0; i < 3 && i < n_sites; ++i) {
    edge += std::norm(out[i]) + std::norm(out[n_sites - 1 - i]);
  }
  if (edge > edge_leak_tol) {
    throw EdgeLeakError("analytic amplitudes reached the window edge (leak " +
                        std::to_string(edge) + ")");
  }
  return out;
}

RabiPair rabi_solution(complex rate_active, int direction, double t) {
  if (direction != 1 && direction != -1) {
    throw std::invalid_argument("rabi_solution: direction must be +1 or -1");
  }
  const double w = std::abs(rate_active);
  if (w == 0.0) {
    throw InfeasibleError("rabi_solution: active rate vanishes (frozen lattice, not a Rabi pair)");
  }
  RabiPair p;
  p.at_start = complex(std::cos(w * t), 0.0);
  p.at_neighbor = -kImag * (std::conj(rate_active) / w) * std::sin(w * t);
  return p;
}

} // namespace bplat
