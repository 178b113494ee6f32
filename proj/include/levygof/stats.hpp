#pragma once
// Test statistics: J_{n,a}, R_{n,a} (raw and standardized), Ibar^{[a,b]},
// Lilliefors-corrected KS/CVM/AD, and the quantile-variance tests N1a/N1b.

#include <cstddef>
#include <string>
#include <vector>

#include "levygof/estimate.hpp"

namespace levygof {

enum class StatFamily { J, R, Rstd, Ibar, KS, CVM, AD, N1a, N1b };

// Rejection direction of each statistic.  Ibar is upper one-sided: the
// published power study shows ~zero power against alternatives that drive
// Ibar negative (e.g. Burr), which a |T|-based region would reject strongly.
enum class Tail {
  Upper,              // J, KS, CVM, AD, Ibar
  TwoSidedAbs,        // R, Rstd: large |T| rejects
  TwoSidedEqualTail,  // N1a, N1b: both small and large values reject
};

struct StatisticSpec {
  StatFamily family = StatFamily::J;
  double a = 1.0;    // tuning parameter (J, R, Rstd, Ibar)
  double b = 1.0;    // second tuning parameter (Ibar only)
  EstimatorKind estimator = EstimatorKind::MLE;
  double sigma = 0.0;  // standardizer for Rstd (sigma_R(a))

  Tail tail() const {
    switch (family) {
      case StatFamily::J:
      case StatFamily::KS:
      case StatFamily::CVM:
      case StatFamily::AD:
      case StatFamily::Ibar:
        return Tail::Upper;
      case StatFamily::R:
      case StatFamily::Rstd:
        return Tail::TwoSidedAbs;
      default:
        return Tail::TwoSidedEqualTail;
    }
  }

  std::string name() const;

  static StatisticSpec J(double a, EstimatorKind e = EstimatorKind::MLE);
  static StatisticSpec R(double a, EstimatorKind e = EstimatorKind::MLE);
  static StatisticSpec Rstd(double a, double sigma,
                            EstimatorKind e = EstimatorKind::MLE);
  static StatisticSpec Ibar(double a, double b);
  static StatisticSpec edf(StatFamily which,
                           EstimatorKind e = EstimatorKind::MLE);
  static StatisticSpec N1(char variant);
};

// Number of grid points for the J sup-search: t_k = k/1000, k = 1..1000.
inline constexpr std::size_t kJGridSize = 1000;

// ---- individual statistics ----

// J_{n,a}: sup over the grid of |(M4(t)^2 - M1(t))| * t^a * (-log t)^3 / 2,
// with M4(t) = (1/n) sum t^{Y_i/4}, M1(t) = (1/n) sum t^{Y_i}, Y = X/lambda^.
// (The cube-then-halve weight is what reproduces the published critical-value
// and p-value tables; see README.)
double stat_J(const Sample& x, double a, EstimatorKind est);

// Same, evaluated for several a values sharing one pass over the sample.
std::vector<double> stat_J_multi(const Sample& x, const std::vector<double>& as,
                                 EstimatorKind est);

// O(n^2 G) reference implementation of the V-statistic double sum.
double stat_J_naive(const Sample& x, double a, EstimatorKind est);

// R_{n,a} = (3 sqrt(pi)/4) [ (1/n^2) sum_{i,j} (a + (Y_i+Y_j)/4)^{-5/2}
//                            - (1/n) sum_i (a + Y_i)^{-5/2} ].
double stat_R(const Sample& x, double a, EstimatorKind est);
std::vector<double> stat_R_multi(const Sample& x, const std::vector<double>& as,
                                 EstimatorKind est);

// Brute-force over all ordered pairs of the symmetric kernel Z(x,y;a).
double stat_R_brute(const Sample& x, double a, EstimatorKind est);

// sqrt(n) * R / sigma.
double stat_R_standardized(const Sample& x, double a, EstimatorKind est,
                           double sigma);

// Ibar^{[a,b]} = (1/n) sum_k [G_n(X_k) - F_n(X_k)], G_n over all n(n-1)
// ordered pairs i != j of (a X_i + b X_j)/(sqrt(a)+sqrt(b))^2.
double stat_Ibar(const Sample& x, double a, double b);
double stat_Ibar_brute(const Sample& x, double a, double b);

// Lilliefors-style EDF statistics (which must be KS, CVM or AD).
double stat_edf(const Sample& x, StatFamily which, EstimatorKind est);

// Sample quantile conditional variance over the order-statistic window
// i = [n*aq]+1 .. [n*bq] (floor brackets, divisor = window length).
double quantile_cond_variance(const Sample& x, double aq, double bq);

// N1a / N1b (variant 'a' or 'b').
double stat_N1(const Sample& x, char variant);

// ---- batched evaluation ----

// Evaluates every spec on one sample, sharing the expensive per-sample
// work (estimates, the J exponential table, the R pair sums) across specs.
std::vector<double> eval_specs(const Sample& x,
                               const std::vector<StatisticSpec>& specs);

// Simple unbatched reference: evaluates each spec independently.
std::vector<double> eval_specs_reference(const Sample& x,
                                         const std::vector<StatisticSpec>& specs);

}  // namespace levygof
