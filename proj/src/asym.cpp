#include "levygof/asym.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "levygof/special.hpp"

namespace levygof {

namespace {

// ---- Gauss–Legendre base rule (nodes computed once by Newton iteration) ----

constexpr int kGaussN = 10;

struct GaussRule {
  std::array<double, kGaussN> node, weight;
  GaussRule() {
    for (int i = 0; i < kGaussN; ++i) {
      // Initial guess for the i-th root of P_n (Abramowitz & Stegun 22.16.6).
      double x = std::cos(M_PI * (i + 0.75) / (kGaussN + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        // Evaluate P_n and P_n' by the recurrence.
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= kGaussN; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = kGaussN * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-15) break;
      }
      node[i] = x;
      weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

const GaussRule& gauss() {
  static const GaussRule g;
  return g;
}

double gauss_panel(const std::function<double(double)>& f, double lo,
                   double hi) {
  const GaussRule& g = gauss();
  const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  double acc = 0.0;
  for (int i = 0; i < kGaussN; ++i) acc += g.weight[i] * f(c + h * g.node[i]);
  return acc * h;
}

struct AdaptState {
  const std::function<double(double)>* f = nullptr;
  const QuadratureConfig* cfg = nullptr;
  int subdivisions = 0;
};

// Adaptive bisection: a panel is accepted when the whole-interval estimate
// agrees with the two half-interval estimates (Kronrod-style embedded error
// estimate by refinement).
double adapt(AdaptState& st, double lo, double hi, double whole, int depth) {
  const double mid = 0.5 * (lo + hi);
  const double left = gauss_panel(*st.f, lo, mid);
  const double right = gauss_panel(*st.f, mid, hi);
  const double refined = left + right;
  const double err = std::fabs(refined - whole);
  if (depth > 60) return refined;
  if (err < st.cfg->abs_tol + st.cfg->rel_tol * std::fabs(refined))
    return refined;
  if (++st.subdivisions > st.cfg->max_subdivisions)
    throw std::runtime_error(
        "integrate: failed to converge (achieved error " +
        std::to_string(err) + ")");
  return adapt(st, lo, mid, left, depth + 1) +
         adapt(st, mid, hi, right, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureConfig& cfg) {
  AdaptState st;
  st.f = &f;
  st.cfg = &cfg;
  // Split into a few seed panels so sharply peaked integrands are noticed.
  const int seed = 8;
  double acc = 0.0;
  for (int i = 0; i < seed; ++i) {
    const double a = lo + (hi - lo) * i / seed;
    const double b = lo + (hi - lo) * (i + 1) / seed;
    acc += adapt(st, a, b, gauss_panel(f, a, b), 0);
  }
  return acc;
}

double levy_expectation(const std::function<double(double)>& h,
                        const QuadratureConfig& cfg) {
  const auto f = [&h](double z) {
    return h(1.0 / (z * z)) * std::exp(-0.5 * z * z);
  };
  return std::sqrt(2.0 / M_PI) * integrate(f, 1e-12, 40.0, cfg);
}

// ---- J-side projections and covariance ----

double proj_psi(double x, double t, double a) {
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("proj_psi: t in (0,1)");
  if (!(x > 0.0)) throw std::domain_error("proj_psi: x > 0");
  const double L = -std::log(t);
  const double w = 0.5 * std::pow(t, a) * L * std::sqrt(L);
  return w * (-2.0 * std::exp(-x * L / 4.0) * std::exp(-std::sqrt(L / 2.0)) +
              std::exp(-x * L) + std::exp(-std::sqrt(2.0 * L)));
}

double cov_kernel(double s, double t, double a) {
  if (!(s > 0.0 && s < 1.0 && t > 0.0 && t < 1.0))
    throw std::domain_error("cov_kernel: s,t in (0,1)");
  const double Ls = -std::log(s), Lt = -std::log(t);
  const double w = std::pow(s, a) * std::pow(t, a) *
                   std::pow(Ls * Lt, 1.5);
  const double e1 = std::exp(-std::sqrt(2.0 * (Ls + Lt)));
  const double e2 = std::exp(-std::sqrt(Lt / 2.0) -
                             std::sqrt(2.0 * Ls + Lt / 2.0));
  const double e3 = std::exp(-std::sqrt(Ls / 2.0) -
                             std::sqrt(2.0 * Lt + Ls / 2.0));
  const double e4 = std::exp(-std::sqrt(Ls / 2.0) - std::sqrt(Lt / 2.0) -
                             std::sqrt((Ls + Lt) / 2.0));
  const double e5 = std::exp(-std::sqrt(2.0 * Ls) - std::sqrt(2.0 * Lt));
  return w * (e1 - 2.0 * e2 - 2.0 * e3 + 4.0 * e4 - e5);
}

double cov_kernel_oracle(double s, double t, double a,
                         const QuadratureConfig& cfg) {
  // Triple integral: K(s,t) = 4 E_x[ psi_q(x;s) psi_q(x;t) ] with psi_q the
  // inner conditional expectation of the kernel, itself done by quadrature.
  const auto kernel = [a](double x, double y, double u) {
    const double L = -std::log(u);
    const double w = std::pow(u, a) * std::pow(L, 1.5);
    return w * (std::exp(-(x + y) * L / 4.0) -
                0.5 * std::exp(-x * L) - 0.5 * std::exp(-y * L));
  };
  QuadratureConfig inner = cfg;
  inner.rel_tol = std::max(cfg.rel_tol, 1e-7);
  inner.abs_tol = std::max(cfg.abs_tol, 1e-10);
  const auto inner_proj = [&](double x, double u) {
    return levy_expectation([&](double y) { return kernel(x, y, u); }, inner);
  };
  // The centering mean term is t-dependent but x-free; precompute.
  const auto mean_term = [&](double u) {
    return levy_expectation([&](double x1) { return inner_proj(x1, u); },
                            inner);
  };
  const double ms = mean_term(s), mt = mean_term(t);
  return 4.0 * levy_expectation(
                   [&](double x) {
                     return (inner_proj(x, s) - ms) * (inner_proj(x, t) - mt);
                   },
                   inner);
}

// ---- R-side projection ----

namespace {
// J4(c, beta) = int_0^inf u^4 e^{-c u^2 - beta u} du via the recurrence
// J0 = 1/2 sqrt(pi/c) e^{beta^2/(4c)} erfc(beta/(2 sqrt(c))),
// J_{n} = ((n-1) J_{n-2} - beta J_{n-1}) / (2c).
double J4int(double c, double beta) {
  const double J0 = 0.5 * std::sqrt(M_PI / c) *
                    std::exp(beta * beta / (4.0 * c)) *
                    std::erfc(beta / (2.0 * std::sqrt(c)));
  const double J1 = (1.0 - beta * J0) / (2.0 * c);
  const double J2 = (J0 - beta * J1) / (2.0 * c);
  const double J3 = (2.0 * J1 - beta * J2) / (2.0 * c);
  return (3.0 * J2 - beta * J3) / (2.0 * c);
}
}  // namespace

double proj_zeta(double x, double a) {
  if (!(x > 0.0 && a > 0.0)) throw std::domain_error("proj_zeta: x,a > 0");
  return 2.0 * J4int(a + x / 4.0, 1.0 / std::sqrt(2.0)) -
         (3.0 * std::sqrt(M_PI) / 8.0) * std::pow(a + x, -2.5) -
         J4int(a, std::sqrt(2.0));
}

double sigma_R2(double a, const QuadratureConfig& cfg) {
  return 4.0 * levy_expectation(
                   [a](double x) {
                     const double z = proj_zeta(x, a);
                     return z * z;
                   },
                   cfg);
}

// ---- Ibar projections ----

double phi_T(double x, const QuadratureConfig& cfg) {
  const double inner = levy_expectation(
      [x](double y) { return 1.0 - levy_cdf0((x + y) / 4.0); }, cfg);
  return 2.0 * inner + levy_cdf0(x);
}

double sigma_T2(const QuadratureConfig& cfg) {
  QuadratureConfig inner = cfg;
  inner.rel_tol = std::max(cfg.rel_tol, 1e-9);
  const double m =
      levy_expectation([&](double x) { return phi_T(x, inner); }, cfg);
  const double m2 = levy_expectation(
      [&](double x) {
        const double p = phi_T(x, inner);
        return p * p;
      },
      cfg);
  return m2 - m * m;
}

double phi_ab(double x, double a, double b, const QuadratureConfig& cfg) {
  const double s2 =
      (std::sqrt(a) + std::sqrt(b)) * (std::sqrt(a) + std::sqrt(b));
  const double A = levy_expectation(
      [&](double y) { return 1.0 - levy_cdf0((a * x + b * y) / s2); }, cfg);
  const double B = levy_expectation(
      [&](double y) { return 1.0 - levy_cdf0((a * y + b * x) / s2); }, cfg);
  return A + B + levy_cdf0(x);
}

double sigma_0ab(double a, double b, const QuadratureConfig& cfg) {
  QuadratureConfig inner = cfg;
  inner.rel_tol = std::max(cfg.rel_tol, 1e-9);
  const double m = levy_expectation(
      [&](double x) { return phi_ab(x, a, b, inner); }, cfg);
  const double m2 = levy_expectation(
      [&](double x) {
        const double p = phi_ab(x, a, b, inner);
        return p * p;
      },
      cfg);
  return m2 - m * m;
}

// ---- KL curvature and slopes ----

double kl_curvature(const AlternativeSpec& alt, const QuadratureConfig& cfg) {
  const double e2 = levy_expectation(
      [&](double x) {
        const double s = alt_score_ratio(x, alt);
        return s * s;
      },
      cfg);
  const double e1 = levy_expectation(
      [&](double x) { return alt_score_ratio(x, alt) / x; }, cfg);
  return e2 - 0.5 * e1 * e1;
}

double bahadur_A(double t, double a, const AlternativeSpec& alt,
                 const QuadratureConfig& cfg) {
  const double e = levy_expectation(
      [&](double x) { return proj_psi(x, t, a) * alt_score_ratio(x, alt); },
      cfg);
  return e * e;
}

double sup_on_unit_interval(const std::function<double(double)>& f,
                            int scan_points) {
  // Dense scan over (0,1), then golden-section refinement of the bracketing
  // interval around the best grid point.
  double best = -std::numeric_limits<double>::infinity();
  int best_i = 1;
  for (int i = 1; i < scan_points; ++i) {
    const double t = static_cast<double>(i) / scan_points;
    const double v = f(t);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  double lo = std::max(1e-12, (best_i - 1.0) / scan_points);
  double hi = std::min(1.0 - 1e-12, (best_i + 1.0) / scan_points);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = f(d);
    }
  }
  return std::max({best, fc, fd});
}

double bahadur_slope_coefficient(const StatisticSpec& spec,
                                 const AlternativeSpec& alt,
                                 const QuadratureConfig& cfg) {
  switch (spec.family) {
    case StatFamily::J: {
      const double a = spec.a;
      const double supA = sup_on_unit_interval(
          [&](double t) { return bahadur_A(t, a, alt, cfg); });
      const double supS = sup_on_unit_interval(
          [&](double t) { return cov_kernel(t, t, a); });
      return 4.0 * supA / supS;
    }
    case StatFamily::R:
    case StatFamily::Rstd: {
      const double num = levy_expectation(
          [&](double x) {
            return proj_zeta(x, spec.a) * alt_score_ratio(x, alt);
          },
          cfg);
      return 4.0 * num * num / sigma_R2(spec.a, cfg);
    }
    case StatFamily::Ibar: {
      QuadratureConfig inner = cfg;
      inner.rel_tol = std::max(cfg.rel_tol, 1e-9);
      const double num = levy_expectation(
          [&](double x) {
            return phi_ab(x, spec.a, spec.b, inner) * alt_score_ratio(x, alt);
          },
          cfg);
      return num * num / sigma_0ab(spec.a, spec.b, cfg);
    }
    default:
      throw std::invalid_argument(
          "bahadur_slope_coefficient: only J, R and Ibar have slopes");
  }
}

EfficiencyResult efficiency(const StatisticSpec& spec,
                            const AlternativeSpec& alt,
                            const QuadratureConfig& cfg) {
  EfficiencyResult r;
  r.statistic = spec;
  r.alternative = alt;
  r.kl = kl_curvature(alt, cfg);
  r.slope_coefficient = bahadur_slope_coefficient(spec, alt, cfg);
  r.efficiency = r.slope_coefficient / r.kl;
  return r;
}

std::vector<std::vector<EfficiencyResult>> efficiency_table(
    const std::vector<StatisticSpec>& specs,
    const std::vector<AlternativeSpec>& alts, const QuadratureConfig& cfg) {
  std::vector<std::vector<EfficiencyResult>> out;
  out.reserve(specs.size());
  for (const auto& s : specs) {
    std::vector<EfficiencyResult> row;
    row.reserve(alts.size());
    for (const auto& a : alts) row.push_back(efficiency(s, a, cfg));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace levygof
