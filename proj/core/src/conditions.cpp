#include "bplat/conditions.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "bplat/bessel.hpp"
#include "bplat/errors.hpp"

namespace bplat {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double rate_scale(double J0, double deltaJ) {
  return std::max({std::abs(J0), std::abs(deltaJ), 1e-30});
}

// Bisection to near machine width; the bracket must carry a sign change.
double bisect(const std::function<double(double)> &f, double lo, double hi, double f_lo) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo < 1e-15 * std::max(1.0, std::abs(mid))) {
      return mid;
    }
    const double f_mid = f(mid);
    if (f_mid == 0.0) {
      return mid;
    }
    if (f_lo * f_mid < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      f_lo = f_mid;
    }
  }
  return 0.5 * (lo + hi);
}

} // namespace

double solve_phase(double J0, double deltaJ, int m, double delta, double lo, double hi) {
  if (m % 2 != 0) {
    throw std::invalid_argument("solve_phase: resonance order must be even");
  }
  if (!(lo < hi)) {
    throw std::invalid_argument("solve_phase: empty bracket");
  }
  const double j0d = bessel_j(0, delta);
  const double jmd = bessel_j(m, delta);
  const double denom = deltaJ * jmd;
  if (denom == 0.0) {
    throw InfeasibleError("solve_phase: deltaJ*J_m(delta) = 0, phase has no effect on the rate");
  }
  const double required_cos = -J0 * j0d / denom;
  if (std::abs(required_cos) > 1.0) {
    throw InfeasibleError("solve_phase: |J0*J_0(delta)/(deltaJ*J_m(delta))| = " +
                          std::to_string(std::abs(required_cos)) + " exceeds 1; no real phase");
  }
  const double seed = std::acos(required_cos); // in [0, pi]

  const auto rate_re = [&](double phi) {
    return effective_rate(J0, deltaJ, m, phi, delta).real();
  };

  // The even-m condition is 2*pi periodic and even in phi; land the arccos
  // branch (or its mirror) inside the caller's bracket.
  double candidate = seed;
  bool found = false;
  for (double base : {seed, 2.0 * kPi - seed}) {
    for (int cycle = -2; cycle <= 2 && !found; ++cycle) {
      const double phi = base + 2.0 * kPi * cycle;
      if (phi >= lo && phi <= hi) {
        candidate = phi;
        found = true;
      }
    }
    if (found) {
      break;
    }
  }
  if (!found) {
    throw InfeasibleError("solve_phase: solution phi = " + std::to_string(seed) +
                          " (or its mirror) lies outside the bracket [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
  }

  // One bisection polish on the rate itself around the closed-form seed.
  double blo = candidate - 1e-3;
  double bhi = candidate + 1e-3;
  double f_lo = rate_re(blo);
  if (f_lo * rate_re(bhi) < 0.0) {
    candidate = bisect(rate_re, blo, bhi, f_lo);
  }
  return candidate;
}

double solve_cdt_phase(double J0, double deltaJ, int m, double delta_a, double delta_b) {
  if (m % 2 != 0) {
    // Odd m: the imaginary part deltaJ*sin(phi)*J_m dies at phi = 0, so the
    // condition collapses to J_0 vanishing on both gap arguments.
    const double j0a = bessel_j(0, delta_a);
    const double j0b = bessel_j(0, delta_b);
    if (std::abs(j0a) > 1e-6 || std::abs(j0b) > 1e-6) {
      throw InfeasibleError("solve_cdt_phase: odd m requires both deltas at zeros of J_0 "
                            "(J_0 values " +
                            std::to_string(j0a) + ", " + std::to_string(j0b) + ")");
    }
    return 0.0;
  }

  const double jma = bessel_j(m, delta_a);
  const double jmb = bessel_j(m, delta_b);
  if (jma == 0.0 || jmb == 0.0) {
    throw InfeasibleError("solve_cdt_phase: J_m vanishes at a gap argument; no phase control");
  }
  const double ra = bessel_j(0, delta_a) / jma;
  const double rb = bessel_j(0, delta_b) / jmb;
  if (std::abs(ra - rb) > 1e-4) {
    throw InfeasibleError("solve_cdt_phase: Bessel ratios differ (" + std::to_string(ra) + " vs " +
                          std::to_string(rb) + "); the delta pair admits no common zero");
  }
  const double required_cos = -J0 * 0.5 * (ra + rb) / deltaJ;
  if (std::abs(required_cos) > 1.0) {
    throw InfeasibleError("solve_cdt_phase: |J0*r/deltaJ| = " +
                          std::to_string(std::abs(required_cos)) + " exceeds 1");
  }
  return std::acos(required_cos);
}

CdtDeltaPair solve_cdt_delta_pair(double J0, double deltaJ, int m, double delta_a_seed, double lo,
                                  double hi) {
  if (m % 2 != 0) {
    throw std::invalid_argument("solve_cdt_delta_pair: resonance order must be even");
  }
  if (!(lo < hi)) {
    throw std::invalid_argument("solve_cdt_delta_pair: empty bracket");
  }
  const double j0a = bessel_j(0, delta_a_seed);
  const double jma = bessel_j(m, delta_a_seed);
  if (jma == 0.0) {
    throw InfeasibleError("solve_cdt_delta_pair: J_m(delta_a) = 0, ratio undefined at the seed");
  }

  // Ratio match in cross-multiplied form: finite across the zeros of J_m that
  // the bracket may straddle.
  const auto residual = [&](double d) {
    return bessel_j(0, d) * jma - j0a * bessel_j(m, d);
  };
  const double f_lo = residual(lo);
  const double f_hi = residual(hi);
  if (f_lo * f_hi > 0.0) {
    throw InfeasibleError("solve_cdt_delta_pair: ratio-match residual has no sign change on [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  const double delta_b = bisect(residual, lo, hi, f_lo);

  const double required_cos = -J0 * (j0a / jma) / deltaJ;
  if (std::abs(required_cos) > 1.0) {
    throw InfeasibleError("solve_cdt_delta_pair: |J0*r/deltaJ| = " +
                          std::to_string(std::abs(required_cos)) + " exceeds 1; no CDT phase");
  }
  return {delta_a_seed, delta_b, std::acos(required_cos)};
}

double solve_instability_phase(double J0, double deltaJ, int m, double delta_a, double delta_b,
                               double lo, double hi) {
  if (!(lo < hi)) {
    throw std::invalid_argument("solve_instability_phase: empty bracket");
  }
  const auto summed = [&](double phi) {
    return (effective_rate(J0, deltaJ, m, phi, delta_a) +
            effective_rate(J0, deltaJ, m, phi, -delta_b))
        .real();
  };
  const double f_lo = summed(lo);
  const double f_hi = summed(hi);
  if (f_lo * f_hi > 0.0) {
    throw InfeasibleError("solve_instability_phase: rate sum has no sign change on the bracket");
  }
  const double phi_c = bisect(summed, lo, hi, f_lo);

  const complex total = effective_rate(J0, deltaJ, m, phi_c, delta_a) +
                        effective_rate(J0, deltaJ, m, phi_c, -delta_b);
  if (std::abs(total) > 1e-12 * rate_scale(J0, deltaJ)) {
    throw InfeasibleError("solve_instability_phase: residual |F_fwd + F_bwd| = " +
                          std::to_string(std::abs(total)) + " after bisection (complex rates?)");
  }
  return phi_c;
}

RabiInfo rabi_of(const EffectiveRates &rates, Bond active, double scale) {
  const complex act = (active == Bond::forward) ? rates.fwd : rates.bwd;
  const complex other = (active == Bond::forward) ? rates.bwd : rates.fwd;
  if (std::abs(other) > 1e-10 * std::max(std::abs(scale), 1e-30)) {
    throw InfeasibleError("rabi_of: inactive bond rate " + std::to_string(std::abs(other)) +
                          " is not negligible; the DL condition does not hold");
  }
  const double w = std::abs(act);
  if (w == 0.0) {
    throw InfeasibleError("rabi_of: active rate vanishes too (CDT, not DL)");
  }
  return {w, kPi / w};
}

ConditionSolution solve_condition(const DriveParams &drive, const GapArguments &gaps,
                                  ConditionKind kind,
                                  std::optional<std::pair<double, double>> bracket) {
  const double lo = bracket ? bracket->first : 0.0;
  const double hi = bracket ? bracket->second : kPi;

  ConditionSolution sol;
  sol.kind = kind;
  switch (kind) {
  case ConditionKind::cdt:
    sol.phi = solve_cdt_phase(drive.J0, drive.deltaJ, drive.m, gaps.delta_a, gaps.delta_b);
    break;
  case ConditionKind::dl_backward:
    // Eq.-style phi_1: the backward rate of even sites, F(-delta_b), vanishes.
    sol.phi = solve_phase(drive.J0, drive.deltaJ, drive.m, -gaps.delta_b, lo, hi);
    break;
  case ConditionKind::dl_forward:
    // phi_2: the forward rate of even sites, F(delta_a), vanishes.
    sol.phi = solve_phase(drive.J0, drive.deltaJ, drive.m, gaps.delta_a, lo, hi);
    break;
  case ConditionKind::instability: {
    double ilo = lo;
    double ihi = hi;
    if (!bracket) {
      const double phi1 = solve_phase(drive.J0, drive.deltaJ, drive.m, -gaps.delta_b, 0.0, kPi);
      const double phi2 = solve_phase(drive.J0, drive.deltaJ, drive.m, gaps.delta_a, 0.0, kPi);
      ilo = std::min(phi1, phi2);
      ihi = std::max(phi1, phi2);
    }
    sol.phi = solve_instability_phase(drive.J0, drive.deltaJ, drive.m, gaps.delta_a, gaps.delta_b,
                                      ilo, ihi);
    break;
  }
  }

  sol.rates_at_phi = rates_for_site(drive.with_phi(sol.phi), gaps, SiteParity::even);
  sol.mirror_phi = 2.0 * kPi - sol.phi;
  if (kind == ConditionKind::dl_backward) {
    const RabiInfo info = rabi_of(sol.rates_at_phi, Bond::forward, drive.J0);
    sol.rabi_freq = info.rabi_freq;
    sol.half_period = info.half_period;
  } else if (kind == ConditionKind::dl_forward) {
    const RabiInfo info = rabi_of(sol.rates_at_phi, Bond::backward, drive.J0);
    sol.rabi_freq = info.rabi_freq;
    sol.half_period = info.half_period;
  }
  return sol;
}

} // namespace bplat
