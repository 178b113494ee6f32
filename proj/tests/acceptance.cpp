// Acceptance gate: one criterion per command-line argument (1..8), or all
// when invoked without arguments.  Each criterion prints a per-check detail
// line and a final "CRITERION k: PASS|FAIL" verdict; the exit status is 0
// only if every requested criterion passes.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <omp.h>

#include "levygof/asym.hpp"
#include "levygof/datasets.hpp"
#include "levygof/mc.hpp"

using namespace levygof;

namespace {

struct Checker {
  int criterion;
  bool ok = true;

  void check(const std::string& what, double got, double want, double tol,
             bool relative = false) {
    const double err = std::fabs(got - want);
    const double lim = relative ? tol * std::fabs(want) : tol;
    const bool pass = err <= lim;
    if (!pass) ok = false;
    std::printf("  [%s] %-46s got %.6g  want %.6g  (tol %.2g%s)\n",
                pass ? "ok" : "FAIL", what.c_str(), got, want, tol,
                relative ? " rel" : "");
  }

  void check_interval(const std::string& what, double got, double lo,
                      double hi) {
    const bool pass = got >= lo && got <= hi;
    if (!pass) ok = false;
    std::printf("  [%s] %-46s got %.6g  want in [%.4g, %.4g]\n",
                pass ? "ok" : "FAIL", what.c_str(), got, lo, hi);
  }

  void check_true(const std::string& what, bool pass) {
    if (!pass) ok = false;
    std::printf("  [%s] %s\n", pass ? "ok" : "FAIL", what.c_str());
  }

  int finish() {
    std::printf("CRITERION %d: %s\n", criterion, ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
  }
};

// ---------------------------------------------------------------- criterion 1

int criterion1() {
  Checker c{1};
  const double a_vals[] = {0.2, 0.5, 1.0, 2.0, 5.0};
  const double table1[] = {4.58804, 0.2672024, 0.02068868, 0.001194688,
                           1.925016e-5};
  for (int i = 0; i < 5; ++i)
    c.check("sigma_R2(" + std::to_string(a_vals[i]).substr(0, 3) + ")",
            sigma_R2(a_vals[i]), table1[i], 5e-4, true);  // 4 sig figs
  c.check("sigma_T2", sigma_T2(), 0.0235051, 1e-3, true);
  struct Spot { double a, b, v; };
  const Spot spots[] = {{1, 2, 0.022621},   {1, 10, 0.0158373},
                        {2, 5, 0.02199},    {3, 7, 0.022201},
                        {4, 5, 0.0234113},  {6, 8, 0.0233495},
                        {10, 10, 0.0235051}};
  for (const auto& s : spots)
    c.check("sigma_0ab(" + std::to_string((int)s.a) + "," +
                std::to_string((int)s.b) + ")",
            sigma_0ab(s.a, s.b), s.v, 2e-3, true);
  return c.finish();
}

// ---------------------------------------------------------------- criterion 2

int criterion2() {
  Checker c{2};
  const double a_vals[] = {0.2, 0.5, 1.0, 2.0, 5.0};
  const double inf_row[] = {4.19818, 1.01314, 0.28191, 0.06774, 0.00860};
  for (int i = 0; i < 5; ++i) {
    const double half_normal_95 = 1.959964 * std::sqrt(sigma_R2(a_vals[i]));
    c.check("1.959964*sigma_R(" + std::to_string(a_vals[i]).substr(0, 3) + ")",
            half_normal_95, inf_row[i], 1e-4);  // 4 decimal places
  }
  return c.finish();
}

// ---------------------------------------------------------------- criterion 3

// Published Appendix E cells for n in {20,100,500}: [J a=1,2,5,10 | R a=0.2,
// 0.5,1,2,5], each as {MLE, MED}.
struct CritRow {
  double lambda;
  std::size_t n;
  double j[4][2];
  double r[5][2];
};

const CritRow kCritRows[] = {
    {0.5, 20,
     {{0.14827, 0.14335}, {0.02585, 0.02465}, {0.00212, 0.00215}, {0.00029, 0.00029}},
     {{4.17008, 5.90912}, {1.06865, 1.11926}, {0.29687, 0.27948}, {0.07024, 0.06797}, {0.00862, 0.00868}}},
    {0.5, 100,
     {{0.13997, 0.13954}, {0.02477, 0.02467}, {0.00215, 0.00214}, {0.00028, 0.00029}},
     {{4.22461, 4.45201}, {1.02478, 1.01877}, {0.28447, 0.28131}, {0.06825, 0.06803}, {0.00863, 0.00867}}},
    {0.5, 500,
     {{0.13778, 0.13719}, {0.02471, 0.02461}, {0.00211, 0.00210}, {0.00029, 0.00029}},
     {{4.20214, 4.20821}, {1.01907, 1.01903}, {0.28273, 0.28304}, {0.06776, 0.06784}, {0.00859, 0.00860}}},
    {5.0, 20,
     {{0.14721, 0.14587}, {0.02576, 0.02487}, {0.00211, 0.00211}, {0.00028, 0.00028}},
     {{4.15862, 5.83832}, {1.06027, 1.11188}, {0.29661, 0.27925}, {0.07042, 0.06805}, {0.00866, 0.00873}}},
    {5.0, 100,
     {{0.14162, 0.13724}, {0.02508, 0.02492}, {0.00208, 0.00208}, {0.00029, 0.00029}},
     {{4.19353, 4.43083}, {1.02103, 1.02076}, {0.28421, 0.28053}, {0.06810, 0.06766}, {0.00865, 0.00866}}},
    {5.0, 500,
     {{0.13690, 0.13597}, {0.02492, 0.02454}, {0.00208, 0.00209}, {0.00029, 0.00029}},
     {{4.20593, 4.22146}, {1.01916, 1.01679}, {0.28350, 0.28182}, {0.06787, 0.06770}, {0.00862, 0.00861}}}};

int criterion3() {
  Checker c{3};
  const double j_as[] = {1.0, 2.0, 5.0, 10.0};
  const double r_as[] = {0.2, 0.5, 1.0, 2.0, 5.0};
  const EstimatorKind ests[] = {EstimatorKind::MLE, EstimatorKind::MBE};

  std::vector<StatisticSpec> specs;
  for (auto e : ests)
    for (double a : j_as) specs.push_back(StatisticSpec::J(a, e));
  for (auto e : ests)
    for (double a : r_as) specs.push_back(StatisticSpec::R(a, e));

  for (const auto& row : kCritRows) {
    MCConfig cfg;
    cfg.replications = 20000;
    cfg.sample_size = row.n;
    cfg.null_lambda = row.lambda;
    cfg.seed = 20240901 + row.n + static_cast<std::uint64_t>(10 * row.lambda);
    const double rn = std::sqrt(static_cast<double>(row.n));

    // sqrt(n) * (95% critical value of T or |T|) for every column of the row.
    const auto row_cvs = [&](std::size_t reps) {
      cfg.replications = reps;
      const auto nulls = mc_null_distributions(specs, cfg);
      std::vector<double> cvs(specs.size());
      for (std::size_t s = 0; s < specs.size(); ++s) {
        std::vector<double> sorted = nulls[s];
        if (specs[s].tail() == Tail::TwoSidedAbs) {
          for (auto& v : sorted) v = std::fabs(v);
          std::sort(sorted.begin(), sorted.end());
        }
        cvs[s] = rn * critical_value(sorted, Tail::Upper, cfg.alpha);
      }
      return cvs;
    };

    auto want = [&](std::size_t s) {
      return s < 8 ? row.j[s % 4][s / 4] : row.r[(s - 8) % 5][(s - 8) / 5];
    };
    auto label = [&](std::size_t s, bool refined) {
      char buf[96];
      if (s < 8)
        std::snprintf(buf, sizeof(buf), "lam=%.1f n=%zu  sqrt(n)J_%g %s%s",
                      row.lambda, row.n, j_as[s % 4], s < 4 ? "MLE" : "MED",
                      refined ? " [refined N=100000]" : "");
      else
        std::snprintf(buf, sizeof(buf), "lam=%.1f n=%zu  |sqrt(n)R_%g| %s%s",
                      row.lambda, row.n, r_as[(s - 8) % 5],
                      s < 13 ? "MLE" : "MED",
                      refined ? " [refined N=100000]" : "");
      return std::string(buf);
    };

    // First pass at the desk-scaled N.  Cells that miss the band there are
    // re-estimated at the reference tables' own N=100000 with the same seed
    // (the first 20000 replication streams are a strict subset), so a miss
    // caused by our quantile noise resolves itself while a genuine reference
    // discrepancy stays failing.
    const auto coarse = row_cvs(20000);
    std::vector<std::size_t> misses;
    for (std::size_t s = 0; s < specs.size(); ++s) {
      if (std::fabs(coarse[s] - want(s)) <= 0.03 * std::fabs(want(s)))
        c.check(label(s, false), coarse[s], want(s), 0.03, true);
      else
        misses.push_back(s);
    }
    if (!misses.empty()) {
      const auto fine = row_cvs(100000);
      for (std::size_t s : misses)
        c.check(label(s, true), fine[s], want(s), 0.03, true);
    }
  }
  if (!c.ok) {
    std::printf(
        "  note: by scale invariance the true sqrt(n) critical values are\n"
        "  identical across lambda, yet the published (lam=0.5, n=20) and\n"
        "  (lam=5, n=20) J_1 MED cells differ from each other by 1.8%%.  A\n"
        "  200000-replication run puts the true value at 0.1410, so the\n"
        "  printed 0.14587 is itself ~3.4%% high, so the cell fails even\n"
        "  after the N=100000 refinement pass.\n"
        "  The discrepancy is documented in the decisions ledger; the check\n"
        "  is left failing rather than weakened.\n");
  }
  return c.finish();
}

// ---------------------------------------------------------------- criterion 4

int criterion4() {
  Checker c{4};
  std::vector<StatisticSpec> specs = {StatisticSpec::Ibar(1.0, 1.0),
                                      StatisticSpec::N1('a'),
                                      StatisticSpec::N1('b')};
  for (auto e : {EstimatorKind::MLE, EstimatorKind::MBE}) {
    for (double a : {1.0, 2.0, 5.0, 10.0}) specs.push_back(StatisticSpec::J(a, e));
    for (double a : {0.2, 0.5, 1.0, 2.0, 5.0}) specs.push_back(StatisticSpec::R(a, e));
    for (auto f : {StatFamily::KS, StatFamily::CVM, StatFamily::AD})
      specs.push_back(StatisticSpec::edf(f, e));
  }
  MCConfig cfg;
  cfg.replications = 10000;
  cfg.sample_size = 50;
  const auto sizes = mc_power_batch(AlternativeSpec::levy(1.0), specs, cfg);
  for (std::size_t i = 0; i < specs.size(); ++i)
    c.check("size of " + specs[i].name(), sizes[i], 0.05, 0.012);
  return c.finish();
}

// ---------------------------------------------------------------- criterion 5

int criterion5() {
  Checker c{5};
  MCConfig cfg;
  cfg.replications = 10000;

  cfg.sample_size = 25;
  c.check_interval(
      "power LN(0,1) n=25 R_1 (MLE)",
      mc_power(AlternativeSpec::lognormal(0.0, 1.0), StatisticSpec::R(1.0), cfg),
      0.82 - 0.03, 0.82 + 0.03);
  c.check_interval(
      "power W(2,1) n=25 J_1 (MLE)",
      mc_power(AlternativeSpec::weibull(2.0, 1.0), StatisticSpec::J(1.0), cfg),
      0.98 - 0.02, 0.98 + 0.02);
  c.check_interval("power Burr(1.5,0.5,0.5) n=25 Ibar[1,1]",
                   mc_power(AlternativeSpec::burr(1.5, 0.5, 0.5),
                            StatisticSpec::Ibar(1.0, 1.0), cfg),
                   0.0, 0.01);
  c.check_interval(
      "power W(0.4,2) n=25 J_1 (MBE)",
      mc_power(AlternativeSpec::weibull(0.4, 2.0),
               StatisticSpec::J(1.0, EstimatorKind::MBE), cfg),
      0.96 - 0.02, 0.96 + 0.02);

  cfg.sample_size = 50;
  c.check_interval(
      "power LL(1,2) n=50 R_0.2 (MLE)",
      mc_power(AlternativeSpec::loglogistic(1.0, 2.0), StatisticSpec::R(0.2),
               cfg),
      0.77 - 0.03, 0.77 + 0.03);
  c.check_interval(
      "power HN(0,1) n=50 N1a",
      mc_power(AlternativeSpec::halfnormal(0.0, 1.0), StatisticSpec::N1('a'),
               cfg),
      0.99, 1.0);
  return c.finish();
}

// ---------------------------------------------------------------- criterion 6

int criterion6() {
  Checker c{6};
  // Worked example: kl(g2) and the J_1/g2 efficiency with intermediates.
  const AlternativeSpec g2 = AlternativeSpec::g2(0.0);
  c.check("kl_curvature(g2)", kl_curvature(g2), 0.0233005, 1e-4, true);
  const double supA = sup_on_unit_interval(
      [&](double t) { return bahadur_A(t, 1.0, g2); });
  c.check("sup A(t) for J_1 vs g2", supA, 1.49667e-5, 5e-3, true);
  const double supS = sup_on_unit_interval(
      [](double t) { return cov_kernel(t, t, 1.0); });
  c.check("sup K(t,t) at a=1", supS, 0.00388889, 5e-3, true);
  c.check("eff(J_1, g2)", efficiency(StatisticSpec::J(1.0), g2).efficiency,
          0.66, 0.01);

  // Full published efficiency tables, +-0.01 per cell.
  const std::vector<AlternativeSpec> alts = {
      AlternativeSpec::g1(10.0, 0.0), AlternativeSpec::g2(0.0),
      AlternativeSpec::g3(3.0, 0.0), AlternativeSpec::g4(0.0),
      AlternativeSpec::g5(0.0)};
  const char* alt_names[] = {"g1[10]", "g2", "g3[3]", "g4", "g5"};

  struct TableRow {
    StatisticSpec spec;
    double cells[5];
  };
  const std::vector<TableRow> rows = {
      {StatisticSpec::Ibar(1.0, 1.0), {0.59, 0.54, 0.73, 0.53, 0.41}},
      {StatisticSpec::J(1.0), {0.91, 0.66, 0.79, 0.68, 0.69}},
      {StatisticSpec::J(2.0), {0.81, 0.54, 0.71, 0.54, 0.49}},
      {StatisticSpec::J(5.0), {0.56, 0.36, 0.52, 0.35, 0.25}},
      {StatisticSpec::J(10.0), {0.35, 0.24, 0.37, 0.23, 0.13}},
      {StatisticSpec::R(0.2), {0.53, 0.79, 0.61, 0.80, 0.86}},
      {StatisticSpec::R(0.5), {0.80, 0.86, 0.82, 0.90, 0.97}},
      {StatisticSpec::R(1.0), {0.94, 0.81, 0.89, 0.84, 0.87}},
      {StatisticSpec::R(2.0), {0.93, 0.69, 0.84, 0.70, 0.65}},
      {StatisticSpec::R(5.0), {0.70, 0.48, 0.66, 0.46, 0.35}},
      // Appendix B generalized-statistic rows.
      {StatisticSpec::Ibar(2.0, 3.0), {0.59, 0.54, 0.73, 0.53, 0.41}},
      {StatisticSpec::Ibar(5.0, 9.0), {0.58, 0.54, 0.73, 0.53, 0.41}},
      {StatisticSpec::Ibar(9.0, 6.0), {0.59, 0.54, 0.73, 0.53, 0.41}},
      {StatisticSpec::Ibar(10.0, 4.0), {0.57, 0.53, 0.72, 0.52, 0.40}}};

  for (const auto& row : rows) {
    for (int j = 0; j < 5; ++j) {
      const auto r = efficiency(row.spec, alts[j]);
      c.check("eff(" + row.spec.name() + ", " + alt_names[j] + ")",
              r.efficiency, row.cells[j], 0.01);
    }
  }
  if (!c.ok) {
    std::printf(
        "  note: the failing cells are confined to the g1[10] column of the\n"
        "  Ibar rows and to (J_1, g1[10]).  The computed values follow from\n"
        "  the published slope formulas evaluated by validated quadrature\n"
        "  (every other cell matches), and finite-n Monte Carlo slope\n"
        "  estimates agree with the computed values, not the published ones.\n"
        "  The discrepancy is documented in the decisions ledger; the check\n"
        "  is left failing rather than weakened.\n");
  }
  return c.finish();
}

// ---------------------------------------------------------------- criterion 7

int criterion7() {
  Checker c{7};
  MCConfig cfg;
  cfg.replications = 10000;

  // Rainfall (raw): every J and every R with a >= 0.5 rejects under MLE.
  {
    const Sample& rain = rainfall_data();
    cfg.sample_size = rain.size();
    std::vector<StatisticSpec> specs;
    for (double a : {1.0, 2.0, 5.0, 10.0}) specs.push_back(StatisticSpec::J(a));
    for (double a : {0.5, 1.0, 2.0, 5.0}) specs.push_back(StatisticSpec::R(a));
    const auto reports = mc_pvalues(rain, specs, cfg);
    for (const auto& r : reports) {
      char label[96];
      std::snprintf(label, sizeof(label), "rainfall %s p=%.4f < 0.05",
                    r.spec.name().c_str(), r.p_value);
      c.check_true(label, r.p_value < 0.05);
    }
  }

  // Hillside (reciprocals of the printed yields; see decisions/README).
  {
    const Sample hills = hillside_data_inverted();
    cfg.sample_size = hills.size();
    const auto r1 = mc_pvalue(hills, StatisticSpec::R(1.0), cfg);
    c.check("hillside R_1 (MLE) p-value", r1.p_value, 0.024, 0.01);
    const auto j5 = mc_pvalue(hills, StatisticSpec::J(5.0), cfg);
    c.check("hillside J_5 (MLE) p-value", j5.p_value, 0.281, 0.02);
    const auto j5m =
        mc_pvalue(hills, StatisticSpec::J(5.0, EstimatorKind::MBE), cfg);
    c.check("hillside J_5 (MBE) p-value", j5m.p_value, 0.70, 0.03);
  }
  return c.finish();
}

// ---------------------------------------------------------------- criterion 8

int criterion8() {
  Checker c{8};

  auto sample_at = [](std::size_t n, std::uint64_t stream) {
    RngStream rng(864213, stream);
    return levy_sample(n, LevyScale(1.0), rng);
  };

  // Exact scale invariance of every statistic.
  {
    const Sample x = sample_at(40, 1);
    const std::vector<StatisticSpec> specs = {
        StatisticSpec::J(1.0), StatisticSpec::J(5.0, EstimatorKind::MBE),
        StatisticSpec::R(0.2), StatisticSpec::R(1.0, EstimatorKind::MBE),
        StatisticSpec::Rstd(1.0, 0.143835),
        StatisticSpec::Ibar(1.0, 1.0), StatisticSpec::Ibar(1.0, 2.0),
        StatisticSpec::edf(StatFamily::KS),
        StatisticSpec::edf(StatFamily::CVM),
        StatisticSpec::edf(StatFamily::AD, EstimatorKind::MBE),
        StatisticSpec::N1('a'), StatisticSpec::N1('b')};
    const auto base = eval_specs(x, specs);
    bool all = true;
    for (double scale : {1e-3, 7.0, 5e4}) {
      Sample y = x;
      for (auto& v : y) v *= scale;
      const auto scaled_vals = eval_specs(y, specs);
      for (std::size_t i = 0; i < specs.size(); ++i)
        if (std::fabs(scaled_vals[i] - base[i]) >
            1e-12 * std::max(1.0, std::fabs(base[i])))
          all = false;
    }
    c.check_true("scale invariance of all statistics (rel 1e-12)", all);
  }

  // J factorized == naive double sum.
  {
    bool all = true;
    for (std::uint64_t s = 0; s < 4; ++s) {
      const Sample x = sample_at(10 + 5 * s, 10 + s);  // n = 10..25 (<=30)
      for (double a : {1.0, 5.0})
        for (auto e : {EstimatorKind::MLE, EstimatorKind::MBE})
          if (std::fabs(stat_J(x, a, e) - stat_J_naive(x, a, e)) > 1e-12)
            all = false;
    }
    c.check_true("J factorized kernel == naive double sum (1e-12)", all);
  }

  // R pair-sum == brute force.
  {
    bool all = true;
    for (std::uint64_t s = 0; s < 4; ++s) {
      const Sample x = sample_at(5 + 5 * s, 20 + s);  // n = 5..20
      for (double a : {0.2, 1.0, 5.0})
        for (auto e : {EstimatorKind::MLE, EstimatorKind::MBE})
          if (std::fabs(stat_R(x, a, e) - stat_R_brute(x, a, e)) > 1e-12)
            all = false;
    }
    c.check_true("R V-statistic == kernel brute force (1e-12)", all);
  }

  // Ibar sorted == brute force.
  {
    bool all = true;
    for (std::uint64_t s = 0; s < 4; ++s) {
      const Sample x = sample_at(4 + 3 * s, 30 + s);  // n = 4..13 (<=15)
      for (auto [a, b] : {std::pair{1.0, 1.0}, {1.0, 2.0}, {10.0, 4.0}})
        if (std::fabs(stat_Ibar(x, a, b) - stat_Ibar_brute(x, a, b)) >
            1e-14 * std::max(1.0, std::fabs(stat_Ibar_brute(x, a, b))))
          all = false;
    }
    c.check_true("Ibar sorted implementation == brute force", all);
  }

  // proj_zeta against its quadrature oracle.
  {
    bool all = true;
    const double cst = 3.0 * std::sqrt(M_PI) / 4.0;
    for (auto [x, a] : {std::pair{0.5, 1.0}, {2.0, 0.5}, {10.0, 2.0}}) {
      const double cross = levy_expectation([x = x, a = a](double y) {
        return std::pow(a + (x + y) / 4.0, -2.5);
      });
      const double single = levy_expectation(
          [a = a](double y) { return std::pow(a + y, -2.5); });
      const double oracle =
          cst * (cross - 0.5 * std::pow(a + x, -2.5) - 0.5 * single);
      if (std::fabs(proj_zeta(x, a) - oracle) > 1e-7) all = false;
    }
    c.check_true("proj_zeta == quadrature oracle (1e-7)", all);
  }

  // Closed-form covariance against the triple-integral oracle.
  {
    bool all = true;
    for (double t : {0.3, 0.7}) {
      const double closed = cov_kernel(t, t, 1.0);
      const double oracle = cov_kernel_oracle(t, t, 1.0);
      if (std::fabs(closed - oracle) > 1e-4 * std::fabs(closed)) all = false;
    }
    c.check_true("K(t,t) == triple-integral oracle (1e-4 rel)", all);
  }

  // Monte Carlo determinism across worker counts and against the serial
  // reference engine.
  {
    const std::vector<StatisticSpec> specs = {
        StatisticSpec::J(1.0), StatisticSpec::R(1.0, EstimatorKind::MBE),
        StatisticSpec::Ibar(1.0, 1.0), StatisticSpec::edf(StatFamily::CVM),
        StatisticSpec::N1('b')};
    MCConfig cfg;
    cfg.replications = 300;
    cfg.sample_size = 30;
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto one = mc_null_distributions(specs, cfg);
    omp_set_num_threads(saved > 1 ? saved : 4);
    const auto many = mc_null_distributions(specs, cfg);
    omp_set_num_threads(saved);
    const auto serial = mc_null_distributions_serial(specs, cfg);
    c.check_true("MC bit-identical across worker counts", one == many);
    c.check_true("MC parallel engine == serial reference", one == serial);
  }

  return c.finish();
}

}  // namespace

int main(int argc, char** argv) {
  int which = 0;
  if (argc > 1) which = std::atoi(argv[1]);
  int failures = 0;
  auto run = [&](int k, int (*fn)()) {
    if (which == 0 || which == k) failures += fn();
  };
  run(1, criterion1);
  run(2, criterion2);
  run(3, criterion3);
  run(4, criterion4);
  run(5, criterion5);
  run(6, criterion6);
  run(7, criterion7);
  run(8, criterion8);
  return failures == 0 ? 0 : 1;
}
