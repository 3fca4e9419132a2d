#ifndef BPLAT_CONDITIONS_HPP
#define BPLAT_CONDITIONS_HPP

#include <optional>
#include <utility>

#include "bplat/effective.hpp"
#include "bplat/lattice.hpp"

namespace bplat {

enum class ConditionKind { cdt, dl_forward, dl_backward, instability };

// A solved phase condition, annotated with the even-site rate pair at the
// solution. For the DL kinds the named bond is the vanishing one and the
// Rabi data describe the surviving bond; mirror_phi is the 2*pi - phi twin
// that solves the same even-m condition.
struct ConditionSolution {
  ConditionKind kind = ConditionKind::cdt;
  double phi = 0.0;
  EffectiveRates rates_at_phi;
  std::optional<double> rabi_freq;
  std::optional<double> half_period;
  double mirror_phi = 0.0;
};

// Phase zeroing the rate of a single bond with gap argument `delta` (even m):
// cos(phi) = -J0*J_0(delta) / (deltaJ*J_m(delta)), arccos seed, bisection
// polish on the rate itself. The zero must lie inside [lo, hi].
// Throws InfeasibleError when |required cos| > 1 or the bracket misses it.
double solve_phase(double J0, double deltaJ, int m, double delta, double lo, double hi);

// Phase zeroing both bond rates at once. Even m needs the shared-ratio
// condition J_0(da)/J_m(da) = J_0(db)/J_m(db); odd m needs both deltas at
// zeros of J_0 and returns phi = 0.
double solve_cdt_phase(double J0, double deltaJ, int m, double delta_a, double delta_b);

// With delta_a held fixed, the matching delta_b inside [lo, hi] that equates
// the Bessel ratios, plus the CDT phase of the pair. The match is solved on
// the cross-multiplied residual J_0(d)J_m(da) - J_0(da)J_m(d), which stays
// finite across zeros of J_m.
struct CdtDeltaPair {
  double delta_a;
  double delta_b;
  double phi0;
};

CdtDeltaPair solve_cdt_delta_pair(double J0, double deltaJ, int m, double delta_a_seed,
                                  double lo, double hi);

// Phase where the forward and backward rates have equal magnitude and
// opposite sign (the symbol loses its cos k part). Bisection on the summed
// rate over [lo, hi].
double solve_instability_phase(double J0, double deltaJ, int m, double delta_a, double delta_b,
                               double lo, double hi);

enum class Bond { forward, backward };

struct RabiInfo {
  double rabi_freq;
  double half_period; // pi / rabi_freq
};

// Rabi data of the surviving bond under a DL condition; requires the other
// bond's rate below 1e-10 * scale. Throws InfeasibleError otherwise, or when
// the active rate itself vanishes (that is CDT, not DL).
RabiInfo rabi_of(const EffectiveRates &rates, Bond active, double scale);

// One-stop solver producing the annotated solution for a parameter set.
// DL kinds bracket [0, pi] by default; instability defaults to the interval
// between the two DL phases. An explicit bracket overrides either.
ConditionSolution solve_condition(const DriveParams &drive, const GapArguments &gaps,
                                  ConditionKind kind,
                                  std::optional<std::pair<double, double>> bracket = std::nullopt);

} // namespace bplat

#endif
