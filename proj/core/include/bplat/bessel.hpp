#ifndef BPLAT_BESSEL_HPP
#define BPLAT_BESSEL_HPP

namespace bplat {

// Integer-order Bessel function of the first kind J_m(x).
//
// m must be >= 0; negative x is folded back through J_m(-x) = (-1)^m J_m(x).
// Absolute error is below 1e-12 for |x| <= 50 (power series for small
// arguments, Miller downward recurrence with normalization otherwise).
// Throws std::domain_error for m < 0 or non-finite x.
double bessel_j(int m, double x);

// k-th positive zero of J_m (k >= 1), to better than 1e-10 absolute.
// Seeded from the McMahon expansion and polished by bracketed bisection.
double bessel_j_zero(int m, int k);

} // namespace bplat

#endif
