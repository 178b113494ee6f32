#pragma once
// Special functions: complementary error function helpers used throughout.
// std::erfc supplies the forward direction; the inverse and a log-stable
// variant are implemented here.

#include <cmath>
#include <limits>
#include <stdexcept>

namespace levygof {

// Inverse complementary error function: erfc(erfcinv(p)) = p for p in (0, 2).
// Strategy: cheap rational initial guess in the appropriate tail, then Newton
// iterations on f(x) = erfc(x) - p (quadratic convergence; the initial guess
// is good to ~5e-4 so three iterations reach full double precision).
double erfcinv(double p);

// erf inverse, for convenience: erfinv(x) = erfcinv(1 - x).
inline double erfinv(double x) { return erfcinv(1.0 - x); }

// log(erfc(x)) without underflow for large positive x.
double log_erfc(double x);

// Standard normal quantile via erfcinv: Phi^{-1}(p).
inline double normal_quantile(double p) {
  return -std::sqrt(2.0) * erfcinv(2.0 * p);
}

// Constant 2*(erfcinv(1/2))^2, the median-based estimator multiplier.
double mbe_constant();

}  // namespace levygof
