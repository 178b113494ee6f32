#pragma once
// Densities, distribution functions, quantiles, samplers and theta-score
// functions for the standard Lévy law and the alternative families used in
// the power study.

#include <stdexcept>
#include <string>
#include <vector>

#include "levygof/rng.hpp"

namespace levygof {

using Sample = std::vector<double>;

struct LevyScale {
  double lambda = 1.0;
  explicit LevyScale(double l) : lambda(l) {
    if (!(l > 0.0) || !std::isfinite(l))
      throw std::domain_error("LevyScale: lambda must be positive and finite");
  }
};

// ---- standard Lévy (alpha = 1/2 stable, location 0) ----

double levy_pdf(double x, LevyScale scale);
double levy_cdf(double x, LevyScale scale);
double levy_quantile(double p, LevyScale scale);
Sample levy_sample(std::size_t n, LevyScale scale, RngStream& rng);

// Convenience for the standard law (lambda = 1).
inline double levy_pdf0(double x) { return levy_pdf(x, LevyScale(1.0)); }
inline double levy_cdf0(double x) { return levy_cdf(x, LevyScale(1.0)); }

// log F0(x), stable near x -> 0+ where F0 underflows.
double levy_log_cdf0(double x);

// ---- alternative families ----

enum class AltFamily {
  Levy,           // Lévy(0, lambda) itself (for size rows of power tables)
  Burr,           // Burr(a, b, c)
  Chen,           // Chen(nu, lambda)
  Frechet,        // FR(a, b)
  Gamma,          // Gamma(a, b)  (rate b)
  LogLogistic,    // LL(a, b)
  LogNormal,      // LN(a, b)
  ChiSquared,     // chi^2_n  (param1 = n)
  HalfNormal,     // HN(a, b)
  ShiftedLogGamma,// LG(a, b)
  Weibull,        // W(a, b)
  G1,             // Lévy mixture g1^{[lambda]}, params: lambda, theta
  G2,             // Lehmann g2, param: theta
  G3,             // contamination g3^{[beta]}, params: beta, theta
  G4,             // first Ley–Paindaveine g4, param: theta
  G5,             // second Ley–Paindaveine g5, param: theta
};

struct AlternativeSpec {
  AltFamily family;
  double p1 = 0.0;     // first shape/scale parameter (or lambda/beta for g1/g3)
  double p2 = 0.0;     // second parameter where applicable
  double p3 = 0.0;     // third parameter (Burr only)
  double theta = 0.0;  // local-alternative parameter for g1..g5

  static AlternativeSpec levy(double lambda);
  static AlternativeSpec burr(double a, double b, double c);
  static AlternativeSpec chen(double nu, double lambda);
  static AlternativeSpec frechet(double a, double b);
  static AlternativeSpec gamma(double a, double b);
  static AlternativeSpec loglogistic(double a, double b);
  static AlternativeSpec lognormal(double a, double b);
  static AlternativeSpec chisq(double n);
  static AlternativeSpec halfnormal(double a, double b);
  static AlternativeSpec shiftedloggamma(double a, double b);
  static AlternativeSpec weibull(double a, double b);
  static AlternativeSpec g1(double lambda, double theta);
  static AlternativeSpec g2(double theta);
  static AlternativeSpec g3(double beta, double theta);
  static AlternativeSpec g4(double theta);
  static AlternativeSpec g5(double theta);

  std::string name() const;
};

// Density of the alternative (used by property tests and the KL machinery).
double alt_pdf(double x, const AlternativeSpec& alt);

// n i.i.d. draws. Throws std::invalid_argument for g4/g5 (score-only).
Sample alt_sample(std::size_t n, const AlternativeSpec& alt, RngStream& rng);

// d g(x; theta) / d theta at theta = 0 for g1..g5.
double alt_theta_score(double x, const AlternativeSpec& alt);

// Score ratio s(x) = g'_theta(x; 0) / f0(x), evaluated in a numerically
// stable way (the ratio has closed forms free of f0 underflow).
double alt_score_ratio(double x, const AlternativeSpec& alt);

}  // namespace levygof
