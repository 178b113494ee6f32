#include "levygof/mc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace levygof {

namespace {

// Values for every (spec, replication), replication streams fixed by index.
std::vector<std::vector<double>> simulate_null(
    const std::vector<StatisticSpec>& specs, const MCConfig& cfg,
    bool parallel) {
  const std::size_t N = cfg.replications;
  const std::size_t ns = specs.size();
  std::vector<std::vector<double>> values(ns, std::vector<double>(N));

#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (long long r = 0; r < static_cast<long long>(N); ++r) {
    RngStream rng(cfg.seed, static_cast<std::uint64_t>(r));
    const Sample x =
        levy_sample(cfg.sample_size, LevyScale(cfg.null_lambda), rng);
    const std::vector<double> v =
        parallel ? eval_specs(x, specs) : eval_specs_reference(x, specs);
    for (std::size_t s = 0; s < ns; ++s) values[s][r] = v[s];
  }
  return values;
}

std::vector<std::vector<double>> sorted_columns(
    std::vector<std::vector<double>> values) {
  for (auto& col : values) std::sort(col.begin(), col.end());
  return values;
}

std::size_t count_geq(const std::vector<double>& sorted, double v) {
  return sorted.end() - std::lower_bound(sorted.begin(), sorted.end(), v);
}

std::size_t count_leq(const std::vector<double>& sorted, double v) {
  return std::upper_bound(sorted.begin(), sorted.end(), v) - sorted.begin();
}

// Order statistic at ceil(q*N) (1-based), no interpolation.
double order_stat(const std::vector<double>& sorted, double q) {
  const std::size_t N = sorted.size();
  std::size_t idx = static_cast<std::size_t>(
      std::ceil(q * static_cast<double>(N)));
  idx = std::clamp<std::size_t>(idx, 1, N);
  return sorted[idx - 1];
}

}  // namespace

std::vector<std::vector<double>> mc_null_distributions(
    const std::vector<StatisticSpec>& specs, const MCConfig& cfg) {
  return sorted_columns(simulate_null(specs, cfg, /*parallel=*/true));
}

std::vector<std::vector<double>> mc_null_distributions_serial(
    const std::vector<StatisticSpec>& specs, const MCConfig& cfg) {
  return sorted_columns(simulate_null(specs, cfg, /*parallel=*/false));
}

double pvalue_from_null(const std::vector<double>& null_sorted, double observed,
                        Tail tail) {
  const double N = static_cast<double>(null_sorted.size());
  switch (tail) {
    case Tail::Upper:
      return (1.0 + static_cast<double>(count_geq(null_sorted, observed))) /
             (N + 1.0);
    case Tail::TwoSidedAbs: {
      // Callers pass a null distribution of |T| (see mc_pvalue).
      return (1.0 + static_cast<double>(
                        count_geq(null_sorted, std::fabs(observed)))) /
             (N + 1.0);
    }
    case Tail::TwoSidedEqualTail: {
      const double lo =
          (1.0 + static_cast<double>(count_leq(null_sorted, observed))) /
          (N + 1.0);
      const double hi =
          (1.0 + static_cast<double>(count_geq(null_sorted, observed))) /
          (N + 1.0);
      return std::min(1.0, 2.0 * std::min(lo, hi));
    }
  }
  return 1.0;
}

std::vector<TestReport> mc_pvalues(const Sample& sample,
                                   const std::vector<StatisticSpec>& specs,
                                   const MCConfig& cfg) {
  MCConfig null_cfg = cfg;
  null_cfg.sample_size = sample.size();
  std::vector<std::vector<double>> null_values =
      simulate_null(specs, null_cfg, /*parallel=*/true);
  const std::vector<double> observed = eval_specs(sample, specs);

  std::vector<TestReport> out(specs.size());
  for (std::size_t s = 0; s < specs.size(); ++s) {
    auto& col = null_values[s];
    const Tail tail = specs[s].tail();
    if (tail == Tail::TwoSidedAbs)
      for (auto& v : col) v = std::fabs(v);
    std::sort(col.begin(), col.end());
    TestReport& rep = out[s];
    rep.spec = specs[s];
    rep.observed = observed[s];
    rep.p_value = pvalue_from_null(col, observed[s], tail);
    rep.replications = cfg.replications;
    rep.seed = cfg.seed;
    rep.reject = rep.p_value <= cfg.alpha;
  }
  return out;
}

TestReport mc_pvalue(const Sample& sample, const StatisticSpec& spec,
                     const MCConfig& cfg) {
  return mc_pvalues(sample, {spec}, cfg)[0];
}

bool RejectionRegion::contains(double t) const {
  switch (tail) {
    case Tail::Upper:
      return t > upper;
    case Tail::TwoSidedAbs:
      return std::fabs(t) > upper;
    case Tail::TwoSidedEqualTail:
      return t < lower || t > upper;
  }
  return false;
}

RejectionRegion rejection_region(const std::vector<double>& null_sorted,
                                 Tail tail, double alpha) {
  RejectionRegion r;
  r.tail = tail;
  switch (tail) {
    case Tail::Upper:
    case Tail::TwoSidedAbs:
      r.upper = order_stat(null_sorted, 1.0 - alpha);
      break;
    case Tail::TwoSidedEqualTail:
      r.lower = order_stat(null_sorted, alpha / 2.0);
      r.upper = order_stat(null_sorted, 1.0 - alpha / 2.0);
      break;
  }
  return r;
}

double critical_value(const std::vector<double>& null_sorted, Tail tail,
                      double alpha) {
  return rejection_region(null_sorted, tail, alpha).upper;
}

std::vector<double> mc_power_batch(const AlternativeSpec& alt,
                                   const std::vector<StatisticSpec>& specs,
                                   const MCConfig& cfg) {
  // Null run for the critical values (shared across specs).
  std::vector<std::vector<double>> null_values =
      simulate_null(specs, cfg, /*parallel=*/true);
  std::vector<RejectionRegion> regions(specs.size());
  for (std::size_t s = 0; s < specs.size(); ++s) {
    auto& col = null_values[s];
    const Tail tail = specs[s].tail();
    if (tail == Tail::TwoSidedAbs)
      for (auto& v : col) v = std::fabs(v);
    std::sort(col.begin(), col.end());
    regions[s] = rejection_region(col, tail, cfg.alpha);
  }

  const std::size_t N = cfg.replications;
  std::vector<std::size_t> rejects(specs.size(), 0);
#pragma omp parallel
  {
    std::vector<std::size_t> local(specs.size(), 0);
#pragma omp for schedule(dynamic, 16) nowait
    for (long long r = 0; r < static_cast<long long>(N); ++r) {
      RngStream rng(cfg.seed, static_cast<std::uint64_t>(r) + kAltStreamTag);
      const Sample x = alt_sample(cfg.sample_size, alt, rng);
      const std::vector<double> v = eval_specs(x, specs);
      for (std::size_t s = 0; s < specs.size(); ++s)
        if (regions[s].contains(v[s])) ++local[s];
    }
#pragma omp critical
    for (std::size_t s = 0; s < specs.size(); ++s) rejects[s] += local[s];
  }

  std::vector<double> out(specs.size());
  for (std::size_t s = 0; s < specs.size(); ++s)
    out[s] = static_cast<double>(rejects[s]) / static_cast<double>(N);
  return out;
}

PowerTable mc_table(const std::vector<StatisticSpec>& specs,
                    const std::vector<std::pair<AlternativeSpec, std::size_t>>&
                        alt_rows,
                    const MCConfig& cfg) {
  PowerTable t;
  for (const auto& s : specs) t.col_names.push_back(s.name());
  for (const auto& [alt, n] : alt_rows) {
    MCConfig row_cfg = cfg;
    row_cfg.sample_size = n;
    const std::vector<double> p = mc_power_batch(alt, specs, row_cfg);
    t.row_names.push_back(alt.name());
    t.row_sizes.push_back(n);
    t.cells.push_back(p);
    std::vector<double> se(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
      se[i] = std::sqrt(p[i] * (1.0 - p[i]) /
                        static_cast<double>(cfg.replications));
    t.standard_errors.push_back(se);
  }
  return t;
}

}  // namespace levygof
