#include "levygof/stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace levygof {

namespace detail {
void j_accumulate(const double* y, std::size_t n, const double* c4, double* m4,
                  double* m1, std::size_t G);
}

namespace {

constexpr std::size_t G = kJGridSize;

struct JGrid {
  std::array<double, G> t, logt, c4, L3half;  // L3half = (-log t)^3 / 2
  JGrid() {
    for (std::size_t k = 0; k < G; ++k) {
      t[k] = static_cast<double>(k + 1) / static_cast<double>(G);
      logt[k] = std::log(t[k]);
      c4[k] = logt[k] / 4.0;
      const double L = -logt[k];
      L3half[k] = L * L * L / 2.0;
    }
  }
};

const JGrid& jgrid() {
  static const JGrid g;
  return g;
}

// Per-thread cache of the a-dependent weight table t^a * (-log t)^3 / 2.
const std::vector<double>& jweights(double a) {
  thread_local std::vector<std::pair<double, std::vector<double>>> cache;
  for (const auto& e : cache)
    if (e.first == a) return e.second;
  const JGrid& g = jgrid();
  std::vector<double> w(G);
  for (std::size_t k = 0; k < G; ++k)
    w[k] = std::exp(a * g.logt[k]) * g.L3half[k];
  cache.emplace_back(a, std::move(w));
  return cache.back().second;
}

void check_sample(const Sample& x) {
  if (x.empty()) throw std::domain_error("statistic: empty sample");
  for (double v : x)
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::domain_error("statistic: sample must be positive and finite");
}

std::vector<double> normalized(const Sample& x, EstimatorKind est) {
  const double lam = estimate_lambda(x, est);
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] / lam;
  return y;
}

inline double pow_m52(double u) {
  // u^{-5/2} = 1 / (u^2 * sqrt(u))
  return 1.0 / (u * u * std::sqrt(u));
}

}  // namespace

std::string StatisticSpec::name() const {
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return std::string(buf);
  };
  // Statistics that depend on the scale estimate carry a suffix for the
  // non-default (median-based) estimator.
  const std::string est =
      estimator == EstimatorKind::MBE ? std::string("@mbe") : std::string();
  switch (family) {
    case StatFamily::J: return "J_" + fmt(a) + est;
    case StatFamily::R: return "R_" + fmt(a) + est;
    case StatFamily::Rstd: return "Rstd_" + fmt(a) + est;
    case StatFamily::Ibar: return "Ibar[" + fmt(a) + "," + fmt(b) + "]";
    case StatFamily::KS: return "KS" + est;
    case StatFamily::CVM: return "CVM" + est;
    case StatFamily::AD: return "AD" + est;
    case StatFamily::N1a: return "N1a";
    case StatFamily::N1b: return "N1b";
  }
  return "?";
}

StatisticSpec StatisticSpec::J(double a, EstimatorKind e) {
  StatisticSpec s;
  s.family = StatFamily::J;
  s.a = a;
  s.estimator = e;
  return s;
}
StatisticSpec StatisticSpec::R(double a, EstimatorKind e) {
  StatisticSpec s;
  s.family = StatFamily::R;
  s.a = a;
  s.estimator = e;
  return s;
}
StatisticSpec StatisticSpec::Rstd(double a, double sigma, EstimatorKind e) {
  StatisticSpec s;
  s.family = StatFamily::Rstd;
  s.a = a;
  s.sigma = sigma;
  s.estimator = e;
  return s;
}
StatisticSpec StatisticSpec::Ibar(double a, double b) {
  StatisticSpec s;
  s.family = StatFamily::Ibar;
  s.a = a;
  s.b = b;
  return s;
}
StatisticSpec StatisticSpec::edf(StatFamily which, EstimatorKind e) {
  StatisticSpec s;
  s.family = which;
  s.estimator = e;
  return s;
}
StatisticSpec StatisticSpec::N1(char variant) {
  StatisticSpec s;
  s.family = variant == 'a' ? StatFamily::N1a : StatFamily::N1b;
  return s;
}

// ---- J ----

std::vector<double> stat_J_multi(const Sample& x, const std::vector<double>& as,
                                 EstimatorKind est) {
  check_sample(x);
  const std::vector<double> y = normalized(x, est);
  const std::size_t n = y.size();
  const JGrid& g = jgrid();

  std::vector<double> m4(G, 0.0), m1(G, 0.0);
  detail::j_accumulate(y.data(), n, g.c4.data(), m4.data(), m1.data(), G);
  const double inv_n = 1.0 / static_cast<double>(n);

  std::vector<double> out;
  out.reserve(as.size());
  for (double a : as) {
    const std::vector<double>& w = jweights(a);
    double best = 0.0;
    for (std::size_t k = 0; k + 1 < G; ++k) {  // skip t = 1 (weight 0)
      const double v4 = m4[k] * inv_n;
      const double d = std::fabs(v4 * v4 - m1[k] * inv_n) * w[k];
      if (d > best) best = d;
    }
    out.push_back(best);
  }
  return out;
}

double stat_J(const Sample& x, double a, EstimatorKind est) {
  return stat_J_multi(x, {a}, est)[0];
}

double stat_J_naive(const Sample& x, double a, EstimatorKind est) {
  check_sample(x);
  const std::vector<double> y = normalized(x, est);
  const std::size_t n = y.size();
  const JGrid& g = jgrid();
  const double inv_n2 = 1.0 / (static_cast<double>(n) * n);
  const double inv_n = 1.0 / static_cast<double>(n);
  double best = 0.0;
  for (std::size_t k = 0; k + 1 < G; ++k) {
    double v4 = 0.0, v1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        v4 += std::exp(g.c4[k] * (y[i] + y[j]));
      v1 += std::exp(g.logt[k] * y[i]);
    }
    const double L = -g.logt[k];
    const double w = std::exp(a * g.logt[k]) * L * L * L / 2.0;
    const double d = std::fabs(v4 * inv_n2 - v1 * inv_n) * w;
    if (d > best) best = d;
  }
  return best;
}

// ---- R ----

std::vector<double> stat_R_multi(const Sample& x, const std::vector<double>& as,
                                 EstimatorKind est) {
  check_sample(x);
  const std::vector<double> y = normalized(x, est);
  const std::size_t n = y.size();
  const std::size_t na = as.size();
  std::vector<double> pair_acc(na, 0.0), single_acc(na, 0.0);
  std::vector<double> srow(n);

  for (std::size_t i = 0; i < n; ++i) {
    const double yi = y[i];
    const std::size_t m = n - i;
    for (std::size_t j = 0; j < m; ++j) srow[j] = (yi + y[i + j]) / 4.0;
    for (std::size_t q = 0; q < na; ++q) {
      const double a = as[q];
      double acc = 0.0;
#pragma omp simd reduction(+ : acc)
      for (std::size_t j = 0; j < m; ++j) acc += pow_m52(a + srow[j]);
      // row had weight 2 for j > i and 1 for the diagonal element j == i
      pair_acc[q] += 2.0 * acc - pow_m52(a + srow[0]);
      single_acc[q] += pow_m52(a + yi);
    }
  }

  const double c = 3.0 * std::sqrt(M_PI) / 4.0;
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> out(na);
  for (std::size_t q = 0; q < na; ++q)
    out[q] = c * (pair_acc[q] * inv_n * inv_n - single_acc[q] * inv_n);
  return out;
}

double stat_R(const Sample& x, double a, EstimatorKind est) {
  return stat_R_multi(x, {a}, est)[0];
}

double stat_R_brute(const Sample& x, double a, EstimatorKind est) {
  check_sample(x);
  const std::vector<double> y = normalized(x, est);
  const std::size_t n = y.size();
  const double c = 3.0 * std::sqrt(M_PI) / 4.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // symmetric kernel Z(x, y; a)
      acc += c * (std::pow(a + (y[i] + y[j]) / 4.0, -2.5) -
                  0.5 * std::pow(a + y[i], -2.5) -
                  0.5 * std::pow(a + y[j], -2.5));
    }
  return acc / (static_cast<double>(n) * n);
}

double stat_R_standardized(const Sample& x, double a, EstimatorKind est,
                           double sigma) {
  if (!(sigma > 0.0)) throw std::domain_error("stat_R_standardized: sigma <= 0");
  return std::sqrt(static_cast<double>(x.size())) * stat_R(x, a, est) / sigma;
}

// ---- Ibar ----

double stat_Ibar(const Sample& x, double a, double b) {
  check_sample(x);
  const std::size_t n = x.size();
  if (n < 2) throw std::domain_error("stat_Ibar: need n >= 2");
  Sample sorted(x);
  std::sort(sorted.begin(), sorted.end());

  const double s2 = (std::sqrt(a) + std::sqrt(b)) * (std::sqrt(a) + std::sqrt(b));
  std::vector<double> pairs;
  pairs.reserve(n * (n - 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) pairs.push_back((a * x[i] + b * x[j]) / s2);
  std::sort(pairs.begin(), pairs.end());

  const double npairs = static_cast<double>(pairs.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double xk = sorted[k];
    const double gn =
        static_cast<double>(std::upper_bound(pairs.begin(), pairs.end(), xk) -
                            pairs.begin()) /
        npairs;
    const double fn =
        static_cast<double>(std::upper_bound(sorted.begin(), sorted.end(), xk) -
                            sorted.begin()) /
        static_cast<double>(n);
    acc += gn - fn;
  }
  return acc / static_cast<double>(n);
}

double stat_Ibar_brute(const Sample& x, double a, double b) {
  check_sample(x);
  const std::size_t n = x.size();
  const double s2 = (std::sqrt(a) + std::sqrt(b)) * (std::sqrt(a) + std::sqrt(b));
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double gn = 0.0, fn = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && (a * x[i] + b * x[j]) / s2 <= x[k]) gn += 1.0;
      if (x[i] <= x[k]) fn += 1.0;
    }
    acc += gn / (static_cast<double>(n) * (n - 1)) - fn / static_cast<double>(n);
  }
  return acc / static_cast<double>(n);
}

// ---- EDF statistics ----

double stat_edf(const Sample& x, StatFamily which, EstimatorKind est) {
  check_sample(x);
  const double lam = estimate_lambda(x, est);
  Sample sorted(x);
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i)
    u[i] = levy_cdf(sorted[i], LevyScale(lam));

  const double dn = static_cast<double>(n);
  switch (which) {
    case StatFamily::KS: {
      double best = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double hi = (static_cast<double>(i) + 1.0) / dn - u[i];
        const double lo = u[i] - static_cast<double>(i) / dn;
        best = std::max({best, hi, lo});
      }
      return best;
    }
    case StatFamily::CVM: {
      double acc = 1.0 / (12.0 * dn);
      for (std::size_t i = 0; i < n; ++i) {
        const double d = u[i] - (2.0 * static_cast<double>(i) + 1.0) / (2.0 * dn);
        acc += d * d;
      }
      return acc;
    }
    case StatFamily::AD: {
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double ui = std::clamp(u[i], 1e-15, 1.0 - 1e-15);
        const double uj = std::clamp(u[n - 1 - i], 1e-15, 1.0 - 1e-15);
        acc += (2.0 * static_cast<double>(i) + 1.0) *
               (std::log(ui) + std::log1p(-uj));
      }
      return -dn - acc / dn;
    }
    default:
      throw std::invalid_argument("stat_edf: which must be KS, CVM or AD");
  }
}

// ---- quantile variance / N1 ----

double quantile_cond_variance(const Sample& x, double aq, double bq) {
  check_sample(x);
  Sample sorted(x);
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  const std::size_t lo = static_cast<std::size_t>(std::floor(n * aq));
  const std::size_t hi = static_cast<std::size_t>(std::floor(n * bq));
  if (hi <= lo) throw std::domain_error("quantile_cond_variance: empty window");
  const double len = static_cast<double>(hi - lo);
  double mean = 0.0;
  for (std::size_t i = lo; i < hi; ++i) mean += sorted[i];
  mean /= len;
  double acc = 0.0;
  for (std::size_t i = lo; i < hi; ++i) {
    const double d = sorted[i] - mean;
    acc += d * d;
  }
  return acc / len;
}

double stat_N1(const Sample& x, char variant) {
  const double s1 = quantile_cond_variance(x, 0.05, 0.25);
  const double s2 = quantile_cond_variance(x, 0.75, 0.95);
  const double s3 = quantile_cond_variance(x, 0.05, 0.95);
  if (!(s3 > 0.0)) throw std::domain_error("stat_N1: degenerate denominator");
  const double rn = std::sqrt(static_cast<double>(x.size()));
  if (variant == 'a') return rn * (s1 - s2) / s3;
  if (variant == 'b') return rn * (2.00 * s1 - 1.01 * s2) / s3;
  throw std::invalid_argument("stat_N1: variant must be 'a' or 'b'");
}

// ---- batched evaluation ----

std::vector<double> eval_specs(const Sample& x,
                               const std::vector<StatisticSpec>& specs) {
  std::vector<double> out(specs.size(), 0.0);
  // Group the J and R/Rstd specs by estimator so the per-sample transforms
  // and kernel passes are shared.
  for (EstimatorKind est : {EstimatorKind::MLE, EstimatorKind::MBE}) {
    std::vector<std::size_t> jidx, ridx;
    std::vector<double> jas, ras;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      const auto& s = specs[i];
      if (s.estimator != est) continue;
      if (s.family == StatFamily::J) {
        jidx.push_back(i);
        jas.push_back(s.a);
      } else if (s.family == StatFamily::R || s.family == StatFamily::Rstd) {
        ridx.push_back(i);
        ras.push_back(s.a);
      }
    }
    if (!jidx.empty()) {
      const std::vector<double> v = stat_J_multi(x, jas, est);
      for (std::size_t q = 0; q < jidx.size(); ++q) out[jidx[q]] = v[q];
    }
    if (!ridx.empty()) {
      const std::vector<double> v = stat_R_multi(x, ras, est);
      for (std::size_t q = 0; q < ridx.size(); ++q) {
        const auto& s = specs[ridx[q]];
        out[ridx[q]] =
            s.family == StatFamily::R
                ? v[q]
                : std::sqrt(static_cast<double>(x.size())) * v[q] / s.sigma;
      }
    }
  }
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& s = specs[i];
    switch (s.family) {
      case StatFamily::J:
      case StatFamily::R:
      case StatFamily::Rstd:
        break;  // done above
      case StatFamily::Ibar:
        out[i] = stat_Ibar(x, s.a, s.b);
        break;
      case StatFamily::KS:
      case StatFamily::CVM:
      case StatFamily::AD:
        out[i] = stat_edf(x, s.family, s.estimator);
        break;
      case StatFamily::N1a:
        out[i] = stat_N1(x, 'a');
        break;
      case StatFamily::N1b:
        out[i] = stat_N1(x, 'b');
        break;
    }
  }
  return out;
}

std::vector<double> eval_specs_reference(
    const Sample& x, const std::vector<StatisticSpec>& specs) {
  std::vector<double> out(specs.size(), 0.0);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& s = specs[i];
    switch (s.family) {
      case StatFamily::J:
        out[i] = stat_J(x, s.a, s.estimator);
        break;
      case StatFamily::R:
        out[i] = stat_R(x, s.a, s.estimator);
        break;
      case StatFamily::Rstd:
        out[i] = stat_R_standardized(x, s.a, s.estimator, s.sigma);
        break;
      case StatFamily::Ibar:
        out[i] = stat_Ibar(x, s.a, s.b);
        break;
      case StatFamily::KS:
      case StatFamily::CVM:
      case StatFamily::AD:
        out[i] = stat_edf(x, s.family, s.estimator);
        break;
      case StatFamily::N1a:
        out[i] = stat_N1(x, 'a');
        break;
      case StatFamily::N1b:
        out[i] = stat_N1(x, 'b');
        break;
    }
  }
  return out;
}

}  // namespace levygof
