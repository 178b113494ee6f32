#include "levygof/special.hpp"

namespace levygof {

namespace {

// Hastings-style rational approximation for the normal tail quantile.
// For q in (0, 1/2], returns z >= 0 with P(Z > z) ~ q, accurate to ~4.5e-4.
double tail_guess(double q) {
  const double t = std::sqrt(-2.0 * std::log(q));
  return t - (2.30753 + 0.27061 * t) / (1.0 + 0.99229 * t + 0.04481 * t * t);
}

}  // namespace

double erfcinv(double p) {
  if (!(p > 0.0 && p < 2.0)) {
    if (p == 0.0) return std::numeric_limits<double>::infinity();
    if (p == 2.0) return -std::numeric_limits<double>::infinity();
    throw std::domain_error("erfcinv: argument outside (0, 2)");
  }
  // erfc(x) = 2*P(Z > x*sqrt(2)) => x = z/sqrt(2) with z the normal tail
  // quantile at q = p/2 (upper tail for p < 1, lower for p > 1 by symmetry).
  const bool upper = p <= 1.0;
  const double q = 0.5 * (upper ? p : 2.0 - p);
  double x = tail_guess(q) / std::sqrt(2.0);
  if (!upper) x = -x;
  // Newton iterations on erfc(x) - p; f'(x) = -2/sqrt(pi) * exp(-x^2).
  const double c = std::sqrt(M_PI) / 2.0;
  for (int it = 0; it < 4; ++it) {
    const double err = std::erfc(x) - p;
    x += err * c * std::exp(x * x);
  }
  return x;
}

double log_erfc(double x) {
  if (x < 8.0) return std::log(std::erfc(x));
  // Asymptotic expansion: erfc(x) ~ e^{-x^2}/(x sqrt(pi)) *
  //   (1 - 1/(2x^2) + 3/(4x^4) - 15/(8x^6) + 105/(16 x^8)).
  const double ix2 = 1.0 / (x * x);
  const double series =
      1.0 + ix2 * (-0.5 + ix2 * (0.75 + ix2 * (-1.875 + ix2 * 6.5625)));
  return -x * x - std::log(x * std::sqrt(M_PI)) + std::log(series);
}

double mbe_constant() {
  static const double c = [] {
    const double e = erfcinv(0.5);
    return 2.0 * e * e;
  }();
  return c;
}

}  // namespace levygof
