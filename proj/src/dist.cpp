#include "levygof/dist.hpp"

#include <cmath>
#include <cstdio>

#include "levygof/special.hpp"

namespace levygof {

namespace {
const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * M_PI);

void check_positive(double x) {
  if (!(x > 0.0)) throw std::domain_error("argument must be positive");
}
}  // namespace

double levy_pdf(double x, LevyScale scale) {
  check_positive(x);
  const double l = scale.lambda;
  // Evaluate in log space so the essential singularity at 0 underflows to 0.
  const double logp =
      0.5 * std::log(l) - l / (2.0 * x) - 1.5 * std::log(x);
  return kInvSqrt2Pi * std::exp(logp);
}

double levy_cdf(double x, LevyScale scale) {
  check_positive(x);
  return std::erfc(std::sqrt(scale.lambda / (2.0 * x)));
}

double levy_log_cdf0(double x) {
  check_positive(x);
  return log_erfc(std::sqrt(0.5 / x));
}

double levy_quantile(double p, LevyScale scale) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("levy_quantile: p outside (0,1)");
  const double e = erfcinv(p);
  return scale.lambda / (2.0 * e * e);
}

Sample levy_sample(std::size_t n, LevyScale scale, RngStream& rng) {
  Sample out(n);
  for (auto& v : out) {
    const double z = rng.normal();
    v = scale.lambda / (z * z);
  }
  return out;
}

// ---- AlternativeSpec constructors ----

namespace {
AlternativeSpec make(AltFamily f, double p1, double p2, double p3,
                     double theta) {
  AlternativeSpec a;
  a.family = f;
  a.p1 = p1;
  a.p2 = p2;
  a.p3 = p3;
  a.theta = theta;
  return a;
}
}  // namespace

AlternativeSpec AlternativeSpec::levy(double lambda) {
  return make(AltFamily::Levy, lambda, 0.0, 0.0, 0.0);
}
AlternativeSpec AlternativeSpec::burr(double a, double b, double c) {
  return make(AltFamily::Burr, a, b, c, 0.0);
}
AlternativeSpec AlternativeSpec::chen(double nu, double lambda) {
  return make(AltFamily::Chen, nu, lambda, 0.0, 0.0);
}
AlternativeSpec AlternativeSpec::frechet(double a, double b) {
  return make(AltFamily::Frechet, a, b, 0.0, 0.0);
}
AlternativeSpec AlternativeSpec::gamma(double a, double b) {
  return make(AltFamily::Gamma, a, b, 0.0, 0.0);
}
AlternativeSpec AlternativeSpec::loglogistic(double a, double b) {
  return make(AltFamily::LogLogistic, a, b, 0.0, 0.0);
}
AlternativeSpec AlternativeSpec::lognormal(double a, double b) {
  return make(AltFamily::LogNormal, a, b, 0.0, 0.0);
}
AlternativeSpec AlternativeSpec::chisq(double n) {
  return make(AltFamily::ChiSquared, n, 0.0, 0.0, 0.0);
}
AlternativeSpec AlternativeSpec::halfnormal(double a, double b) {
  return make(AltFamily::HalfNormal, a, b, 0.0, 0.0);
}
AlternativeSpec AlternativeSpec::shiftedloggamma(double a, double b) {
  return make(AltFamily::ShiftedLogGamma, a, b, 0.0, 0.0);
}
AlternativeSpec AlternativeSpec::weibull(double a, double b) {
  return make(AltFamily::Weibull, a, b, 0.0, 0.0);
}
AlternativeSpec AlternativeSpec::g1(double lambda, double theta) {
  return make(AltFamily::G1, lambda, 0.0, 0.0, theta);
}
AlternativeSpec AlternativeSpec::g2(double theta) {
  return make(AltFamily::G2, 0.0, 0.0, 0.0, theta);
}
AlternativeSpec AlternativeSpec::g3(double beta, double theta) {
  return make(AltFamily::G3, beta, 0.0, 0.0, theta);
}
AlternativeSpec AlternativeSpec::g4(double theta) {
  return make(AltFamily::G4, 0.0, 0.0, 0.0, theta);
}
AlternativeSpec AlternativeSpec::g5(double theta) {
  return make(AltFamily::G5, 0.0, 0.0, 0.0, theta);
}

std::string AlternativeSpec::name() const {
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return std::string(buf);
  };
  switch (family) {
    case AltFamily::Levy: return "Levy(0," + fmt(p1) + ")";
    case AltFamily::Burr:
      return "Burr(" + fmt(p1) + "," + fmt(p2) + "," + fmt(p3) + ")";
    case AltFamily::Chen: return "Chen(" + fmt(p1) + "," + fmt(p2) + ")";
    case AltFamily::Frechet: return "FR(" + fmt(p1) + "," + fmt(p2) + ")";
    case AltFamily::Gamma: return "Gamma(" + fmt(p1) + "," + fmt(p2) + ")";
    case AltFamily::LogLogistic: return "LL(" + fmt(p1) + "," + fmt(p2) + ")";
    case AltFamily::LogNormal: return "LN(" + fmt(p1) + "," + fmt(p2) + ")";
    case AltFamily::ChiSquared: return "chisq(" + fmt(p1) + ")";
    case AltFamily::HalfNormal: return "HN(" + fmt(p1) + "," + fmt(p2) + ")";
    case AltFamily::ShiftedLogGamma:
      return "LG(" + fmt(p1) + "," + fmt(p2) + ")";
    case AltFamily::Weibull: return "W(" + fmt(p1) + "," + fmt(p2) + ")";
    case AltFamily::G1: return "g1[" + fmt(p1) + "]";
    case AltFamily::G2: return "g2";
    case AltFamily::G3: return "g3[" + fmt(p1) + "]";
    case AltFamily::G4: return "g4";
    case AltFamily::G5: return "g5";
  }
  return "?";
}

// ---- densities ----

double alt_pdf(double x, const AlternativeSpec& alt) {
  const double a = alt.p1, b = alt.p2, c = alt.p3, th = alt.theta;
  switch (alt.family) {
    case AltFamily::Levy:
      return x > 0.0 ? levy_pdf(x, LevyScale(a)) : 0.0;
    case AltFamily::Burr: {
      if (x <= 0.0) return 0.0;
      const double r = std::pow(x / a, b);
      return c * b * r / (x * std::pow(1.0 + r, c + 1.0));
    }
    case AltFamily::Chen: {
      if (x <= 0.0) return 0.0;
      const double xl = std::pow(x, b);
      return a * b * std::pow(x, b - 1.0) *
             std::exp(a * (1.0 - std::exp(xl)) + xl);
    }
    case AltFamily::Frechet: {
      if (x <= 0.0) return 0.0;
      const double r = std::pow(x / b, -a);
      return (a / b) * std::pow(x / b, -a - 1.0) * std::exp(-r);
    }
    case AltFamily::Gamma: {
      if (x <= 0.0) return 0.0;
      return std::exp(a * std::log(b) + (a - 1.0) * std::log(x) - b * x -
                      std::lgamma(a));
    }
    case AltFamily::LogLogistic: {
      if (x <= 0.0) return 0.0;
      const double r = std::pow(x / b, a);
      const double d = 1.0 + r;
      return (a / x) * r / (d * d);
    }
    case AltFamily::LogNormal: {
      if (x <= 0.0) return 0.0;
      const double z = (std::log(x) - a) / b;
      return kInvSqrt2Pi / (b * x) * std::exp(-0.5 * z * z);
    }
    case AltFamily::ChiSquared: {
      if (x <= 0.0) return 0.0;
      const double k = a / 2.0;
      return std::exp((k - 1.0) * std::log(x) - x / 2.0 - k * std::log(2.0) -
                      std::lgamma(k));
    }
    case AltFamily::HalfNormal: {
      if (x <= a) return 0.0;
      const double z1 = (x - a) / b, z2 = (x + a) / b;
      return kInvSqrt2Pi / b *
             (std::exp(-0.5 * z1 * z1) + std::exp(-0.5 * z2 * z2));
    }
    case AltFamily::ShiftedLogGamma: {
      if (x <= 0.0) return 0.0;
      // b^a/Gamma(a) * log(x+1)^{a-1} / (x+1)^{b+1}
      const double l = std::log1p(x);
      return std::exp(a * std::log(b) + (a - 1.0) * std::log(l) -
                      (b + 1.0) * l - std::lgamma(a));
    }
    case AltFamily::Weibull: {
      if (x <= 0.0) return 0.0;
      const double r = std::pow(x / b, a);
      return (a / x) * r * std::exp(-r);
    }
    case AltFamily::G1: {
      if (x <= 0.0) return 0.0;
      return (1.0 - th) * levy_pdf0(x) +
             th / a * levy_pdf(x / a, LevyScale(1.0));
    }
    case AltFamily::G2: {
      if (x <= 0.0) return 0.0;
      const double F = levy_cdf0(x);
      return (1.0 + th) * std::pow(F, th) * levy_pdf0(x);
    }
    case AltFamily::G3: {
      if (x <= 0.0) return 0.0;
      const double F = levy_cdf0(x);
      return (1.0 - th) * levy_pdf0(x) +
             th * a * std::pow(F, a - 1.0) * levy_pdf0(x);
    }
    case AltFamily::G4: {
      if (x <= 0.0) return 0.0;
      return levy_pdf0(x) * (1.0 + th * (2.0 * levy_cdf0(x) - 1.0));
    }
    case AltFamily::G5: {
      if (x <= 0.0) return 0.0;
      return levy_pdf0(x) *
             (1.0 - th * M_PI * std::cos(M_PI * levy_cdf0(x)));
    }
  }
  return 0.0;
}

// ---- samplers ----

Sample alt_sample(std::size_t n, const AlternativeSpec& alt, RngStream& rng) {
  const double a = alt.p1, b = alt.p2, c = alt.p3, th = alt.theta;
  Sample out(n);
  switch (alt.family) {
    case AltFamily::Levy:
      return levy_sample(n, LevyScale(a), rng);
    case AltFamily::Burr:
      for (auto& v : out) {
        const double u = rng.uniform();
        v = a * std::pow(std::pow(u, -1.0 / c) - 1.0, 1.0 / b);
      }
      break;
    case AltFamily::Chen:
      for (auto& v : out) {
        const double u = rng.uniform();
        v = std::pow(std::log(1.0 - std::log1p(-u) / a), 1.0 / b);
      }
      break;
    case AltFamily::Frechet:
      for (auto& v : out) {
        v = b * std::pow(-std::log(rng.uniform()), -1.0 / a);
      }
      break;
    case AltFamily::Gamma:
      for (auto& v : out) v = rng.gamma(a) / b;
      break;
    case AltFamily::LogLogistic:
      for (auto& v : out) {
        const double u = rng.uniform();
        v = b * std::pow(u / (1.0 - u), 1.0 / a);
      }
      break;
    case AltFamily::LogNormal:
      for (auto& v : out) v = std::exp(a + b * rng.normal());
      break;
    case AltFamily::ChiSquared:
      for (auto& v : out) v = 2.0 * rng.gamma(a / 2.0);
      break;
    case AltFamily::HalfNormal:
      for (auto& v : out) v = a + b * std::fabs(rng.normal());
      break;
    case AltFamily::ShiftedLogGamma:
      for (auto& v : out) v = std::expm1(rng.gamma(a) / b);
      break;
    case AltFamily::Weibull:
      for (auto& v : out) {
        v = b * std::pow(-std::log(rng.uniform()), 1.0 / a);
      }
      break;
    case AltFamily::G1:
      for (auto& v : out) {
        const double mix = rng.uniform();
        const double z = rng.normal();
        v = (mix < th ? a : 1.0) / (z * z);
      }
      break;
    case AltFamily::G2:
      for (auto& v : out) {
        v = levy_quantile(std::pow(rng.uniform(), 1.0 / (1.0 + th)),
                          LevyScale(1.0));
      }
      break;
    case AltFamily::G3:
      for (auto& v : out) {
        const double mix = rng.uniform();
        const double u = rng.uniform();
        v = mix < th ? levy_quantile(std::pow(u, 1.0 / a), LevyScale(1.0))
                     : levy_quantile(u, LevyScale(1.0));
      }
      break;
    case AltFamily::G4:
    case AltFamily::G5:
      throw std::invalid_argument(
          "alt_sample: " + alt.name() + " supports score evaluation only");
  }
  return out;
}

// ---- theta scores ----

double alt_score_ratio(double x, const AlternativeSpec& alt) {
  check_positive(x);
  switch (alt.family) {
    case AltFamily::G1: {
      const double l = alt.p1;
      return std::sqrt(l) * std::exp(-(l - 1.0) / (2.0 * x)) - 1.0;
    }
    case AltFamily::G2:
      return 1.0 + levy_log_cdf0(x);
    case AltFamily::G3: {
      const double beta = alt.p1;
      return beta * std::pow(levy_cdf0(x), beta - 1.0) - 1.0;
    }
    case AltFamily::G4:
      return 2.0 * levy_cdf0(x) - 1.0;
    case AltFamily::G5:
      return -M_PI * std::cos(M_PI * levy_cdf0(x));
    default:
      throw std::invalid_argument("alt_score_ratio: only g1..g5 have scores");
  }
}

double alt_theta_score(double x, const AlternativeSpec& alt) {
  return alt_score_ratio(x, alt) * levy_pdf0(x);
}

}  // namespace levygof
