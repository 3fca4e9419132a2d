#include "bplat/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bplat {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Defining power series; used below the cancellation threshold where the
// largest term stays within a few orders of magnitude of the result.
double series_j(int m, double x) {
  const double half = 0.5 * x;
  double term = 1.0;
  for (int i = 1; i <= m; ++i) {
    term *= half / static_cast<double>(i);
  }
  double sum = term;
  const double neg_q = -half * half;
  for (int j = 1; j <= 256; ++j) {
    term *= neg_q / (static_cast<double>(j) * static_cast<double>(m + j));
    sum += term;
    if (std::abs(term) < 1e-17) {
      break;
    }
  }
  return sum;
}

// Miller downward recurrence with J0 + 2*sum(J_{2k}) normalization.
// Valid for x > 0; start order sits far above the turning point so the
// seed contamination is negligible at double precision.
double miller_j(int m, double x) {
  const int above = std::max(m, static_cast<int>(std::ceil(x)));
  int start = above + 60;
  if (start % 2 != 0) {
    ++start;
  }
  double j_up = 0.0;    // J_{k+1}
  double j_k = 1e-30;   // J_k
  double wanted = (m == start) ? j_k : 0.0;
  double norm = 0.0;
  for (int k = start; k >= 1; --k) {
    const double j_dn = (2.0 * k / x) * j_k - j_up; // J_{k-1}
    j_up = j_k;
    j_k = j_dn;
    const int order = k - 1;
    if (order == 0) {
      norm += j_k;
    } else if (order % 2 == 0) {
      norm += 2.0 * j_k;
    }
    if (order == m) {
      wanted = j_k;
    }
    if (std::abs(j_k) > 1e250) {
      j_k *= 1e-250;
      j_up *= 1e-250;
      norm *= 1e-250;
      wanted *= 1e-250;
    }
  }
  return wanted / norm;
}

} // namespace

double bessel_j(int m, double x) {
  if (m < 0) {
    throw std::domain_error("bessel_j: order must be non-negative, got " + std::to_string(m));
  }
  if (!std::isfinite(x)) {
    throw std::domain_error("bessel_j: argument must be finite");
  }
  double sign = 1.0;
  if (x < 0.0) {
    x = -x;
    sign = (m % 2 != 0) ? -1.0 : 1.0;
  }
  if (x == 0.0) {
    return (m == 0) ? 1.0 : 0.0;
  }
  const double value = (x <= 10.0) ? series_j(m, x) : miller_j(m, x);
  return sign * value;
}

double bessel_j_zero(int m, int k) {
  if (m < 0) {
    throw std::domain_error("bessel_j_zero: order must be non-negative");
  }
  if (k < 1) {
    throw std::domain_error("bessel_j_zero: zero index must be >= 1");
  }

  // McMahon expansion; for the first zero of m >= 1 the Airy-edge form is
  // the better seed.
  double guess;
  if (m >= 1 && k == 1) {
    const double c = std::cbrt(static_cast<double>(m));
    guess = m + 1.8557571 * c + 1.0331504 / c;
  } else {
    const double beta = (k + 0.5 * m - 0.25) * kPi;
    const double mu = 4.0 * static_cast<double>(m) * m;
    const double b8 = 8.0 * beta;
    guess = beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8 * b8);
  }

  // Expand a bracket around the seed until the sign changes.
  double width = 0.5;
  double lo = std::max(guess - width, 1e-8);
  double hi = guess + width;
  double f_lo = bessel_j(m, lo);
  double f_hi = bessel_j(m, hi);
  for (int grow = 0; grow < 8 && f_lo * f_hi > 0.0; ++grow) {
    width *= 1.6;
    lo = std::max(guess - width, 1e-8);
    hi = guess + width;
    f_lo = bessel_j(m, lo);
    f_hi = bessel_j(m, hi);
  }
  if (f_lo * f_hi > 0.0) {
    throw std::runtime_error("bessel_j_zero: failed to bracket zero");
  }

  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo < 1e-13 * std::max(1.0, mid)) {
      break;
    }
    const double f_mid = bessel_j(m, mid);
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

} // namespace bplat
