#pragma once
// Numerical asymptotics: heavy-tail expectation quadrature, variance
// constants, the Gaussian-process covariance for J, the projections
// psi/zeta/phi, Kullback–Leibler curvature and local approximate Bahadur
// slopes/efficiencies.

#include <functional>

#include "levygof/stats.hpp"

namespace levygof {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 2000;
};

// Adaptive quadrature of f over the finite interval [lo, hi].
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureConfig& cfg = {});

// E_{F0} h(X) via the exact substitution X = 1/Z^2, Z standard normal:
// E h(X) = sqrt(2/pi) * int_0^inf h(1/z^2) e^{-z^2/2} dz  (truncated at 40).
double levy_expectation(const std::function<double(double)>& h,
                        const QuadratureConfig& cfg = {});

// First projection of the J kernel (with the printed (-log t)^{3/2} weight):
// psi(x;t,a) = 1/2 t^a (-log t)^{3/2}
//              (-2 t^{x/4} e^{-sqrt((-log t)/2)} + t^x + e^{-sqrt(2(-log t))}).
double proj_psi(double x, double t, double a);

// Covariance function K(s,t) of the limiting Gaussian process of
// sqrt(n) J_{n,a}; closed five-exponential form. K(t,t) = 4 E psi(X;t,a)^2.
double cov_kernel(double s, double t, double a);

// Independent nested-quadrature oracle for cov_kernel (triple integral).
double cov_kernel_oracle(double s, double t, double a,
                         const QuadratureConfig& cfg = {});

// First projection of the R kernel, closed form.
double proj_zeta(double x, double a);

// sigma_R^2(a) = 4 E zeta(X;a)^2  (Table 1).
double sigma_R2(double a, const QuadratureConfig& cfg = {});

// phi for Ibar^{[1,1]}: phi(x) = 2 E_Y[1 - F0((x+Y)/4)] + F0(x).
double phi_T(double x, const QuadratureConfig& cfg = {});
double sigma_T2(const QuadratureConfig& cfg = {});

// Projection for Ibar^{[a,b]} (centred version has variance sigma_0ab).
double phi_ab(double x, double a, double b, const QuadratureConfig& cfg = {});
double sigma_0ab(double a, double b, const QuadratureConfig& cfg = {});

// Kullback–Leibler curvature: coefficient of theta^2 in 2K(theta):
// E[s^2] - 1/2 (E[s/X])^2 with s the score ratio of the alternative.
double kl_curvature(const AlternativeSpec& alt,
                    const QuadratureConfig& cfg = {});

// A(t) = (E[psi(X;t,a) s(X)])^2, the J slope numerator before the sup.
double bahadur_A(double t, double a, const AlternativeSpec& alt,
                 const QuadratureConfig& cfg = {});

// sup over t in (0,1) of a scalar function (dense scan + golden section).
double sup_on_unit_interval(const std::function<double(double)>& f,
                            int scan_points = 2000);

struct EfficiencyResult {
  StatisticSpec statistic;
  AlternativeSpec alternative;
  double kl = 0.0;                // curvature of 2K(theta)
  double slope_coefficient = 0.0; // theta^2 coefficient of the Bahadur slope
  double efficiency = 0.0;        // slope_coefficient / kl
};

// Bahadur slope coefficient for J(a), R(a) or Ibar(a,b) against g1..g5.
double bahadur_slope_coefficient(const StatisticSpec& spec,
                                 const AlternativeSpec& alt,
                                 const QuadratureConfig& cfg = {});

EfficiencyResult efficiency(const StatisticSpec& spec,
                            const AlternativeSpec& alt,
                            const QuadratureConfig& cfg = {});

std::vector<std::vector<EfficiencyResult>> efficiency_table(
    const std::vector<StatisticSpec>& specs,
    const std::vector<AlternativeSpec>& alts,
    const QuadratureConfig& cfg = {});

}  // namespace levygof
