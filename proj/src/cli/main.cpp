// levygof-cli: goodness-of-fit tests for the Lévy distribution with unknown
// scale.  Subcommands: test, critvals, power, efficiency, constants, datasets.
//
// Exit codes: 0 = success (for `test`: H0 retained), 1 = H0 rejected at the
// requested level (`test` only), 2 = any error (bad flags, bad input file,
// nonpositive data, ...).

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "levygof/asym.hpp"
#include "levygof/datasets.hpp"
#include "levygof/mc.hpp"
#include "levygof/special.hpp"

using json = nlohmann::ordered_json;
using namespace levygof;

namespace {

// ------------------------------------------------------------------ output

enum class OutFormat { Text, Csv, Json };

OutFormat parse_format(const std::string& s) {
  if (s == "text") return OutFormat::Text;
  if (s == "csv") return OutFormat::Csv;
  return OutFormat::Json;
}

// A labelled rectangular table of doubles, renderable as text, CSV or JSON.
struct OutTable {
  std::string title;
  std::string row_header = "row";
  std::vector<std::string> cols;
  std::vector<std::string> rows;
  std::vector<std::vector<double>> cells;  // [row][col]
  int precision = 5;

  void render(OutFormat fmt) const {
    switch (fmt) {
      case OutFormat::Text: {
        if (!title.empty()) std::printf("%s\n", title.c_str());
        int w = 10;
        for (const auto& c : cols) w = std::max(w, int(c.size()) + 2);
        int lw = int(row_header.size());
        for (const auto& r : rows) lw = std::max(lw, int(r.size()));
        std::printf("%-*s", lw + 2, row_header.c_str());
        for (const auto& c : cols) std::printf("%*s", w, c.c_str());
        std::printf("\n");
        for (std::size_t i = 0; i < rows.size(); ++i) {
          std::printf("%-*s", lw + 2, rows[i].c_str());
          for (double v : cells[i]) std::printf("%*.*g", w, precision, v);
          std::printf("\n");
        }
        break;
      }
      case OutFormat::Csv: {
        std::printf("%s", row_header.c_str());
        for (const auto& c : cols) std::printf(",%s", c.c_str());
        std::printf("\n");
        for (std::size_t i = 0; i < rows.size(); ++i) {
          std::printf("%s", rows[i].c_str());
          for (double v : cells[i]) std::printf(",%.*g", 17, v);
          std::printf("\n");
        }
        break;
      }
      case OutFormat::Json: {
        json j;
        if (!title.empty()) j["title"] = title;
        j["columns"] = cols;
        j["rows"] = rows;
        j["cells"] = cells;
        std::printf("%s\n", j.dump(2).c_str());
        break;
      }
    }
  }
};

// ------------------------------------------------------------------ parsing

// Splits "name(p1,p2,...)" into name + params; bare "name" gives no params.
void split_call(const std::string& token, std::string& name,
                std::vector<double>& params) {
  const auto open = token.find('(');
  if (open == std::string::npos) {
    name = token;
    return;
  }
  if (token.back() != ')')
    throw std::runtime_error("malformed token '" + token + "': missing ')'");
  name = token.substr(0, open);
  std::stringstream ss(token.substr(open + 1, token.size() - open - 2));
  std::string field;
  while (std::getline(ss, field, ',')) {
    std::size_t used = 0;
    params.push_back(std::stod(field, &used));
    if (used != field.size())
      throw std::runtime_error("bad number '" + field + "' in '" + token + "'");
  }
}

AlternativeSpec parse_alt(const std::string& token) {
  std::string name;
  std::vector<double> p;
  split_call(token, name, p);
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (p.size() < lo || p.size() > hi)
      throw std::runtime_error("alternative '" + token +
                               "': wrong number of parameters");
  };
  if (name == "levy") { need(1, 1); return AlternativeSpec::levy(p[0]); }
  if (name == "burr") { need(3, 3); return AlternativeSpec::burr(p[0], p[1], p[2]); }
  if (name == "chen") { need(2, 2); return AlternativeSpec::chen(p[0], p[1]); }
  if (name == "frechet") { need(2, 2); return AlternativeSpec::frechet(p[0], p[1]); }
  if (name == "gamma") { need(2, 2); return AlternativeSpec::gamma(p[0], p[1]); }
  if (name == "loglogistic") { need(2, 2); return AlternativeSpec::loglogistic(p[0], p[1]); }
  if (name == "lognormal") { need(2, 2); return AlternativeSpec::lognormal(p[0], p[1]); }
  if (name == "chisq") { need(1, 1); return AlternativeSpec::chisq(p[0]); }
  if (name == "halfnormal") { need(2, 2); return AlternativeSpec::halfnormal(p[0], p[1]); }
  if (name == "shiftedloggamma") { need(2, 2); return AlternativeSpec::shiftedloggamma(p[0], p[1]); }
  if (name == "weibull") { need(2, 2); return AlternativeSpec::weibull(p[0], p[1]); }
  // Local alternatives: last parameter (optional) is theta.
  if (name == "g1") { need(1, 2); return AlternativeSpec::g1(p[0], p.size() > 1 ? p[1] : 0.0); }
  if (name == "g2") { need(0, 1); return AlternativeSpec::g2(p.empty() ? 0.0 : p[0]); }
  if (name == "g3") { need(1, 2); return AlternativeSpec::g3(p[0], p.size() > 1 ? p[1] : 0.0); }
  if (name == "g4") { need(0, 1); return AlternativeSpec::g4(p.empty() ? 0.0 : p[0]); }
  if (name == "g5") { need(0, 1); return AlternativeSpec::g5(p.empty() ? 0.0 : p[0]); }
  throw std::runtime_error("unknown alternative family '" + name + "'");
}

EstimatorKind parse_estimator(const std::string& s) {
  if (s == "mle") return EstimatorKind::MLE;
  if (s == "mbe" || s == "med") return EstimatorKind::MBE;
  throw std::runtime_error("unknown estimator '" + s + "' (use mle or mbe)");
}

// One statistic token: "J(1)", "R(0.5)@mbe", "Ibar(1,2)", "Rstd(1)", "KS",
// "N1a", or a bare family name ("J", "R") to be expanded over `a_grid`.
// For Rstd the standardizer sigma_R(a) is computed on demand.
std::vector<StatisticSpec> expand_stat_token(const std::string& token,
                                             const std::vector<double>& a_flags,
                                             double b_flag,
                                             EstimatorKind default_est) {
  std::string body = token;
  EstimatorKind est = default_est;
  if (const auto at = token.rfind('@'); at != std::string::npos) {
    est = parse_estimator(token.substr(at + 1));
    body = token.substr(0, at);
  }
  std::string name;
  std::vector<double> p;
  split_call(body, name, p);

  auto a_grid = [&](std::initializer_list<double> def) -> std::vector<double> {
    if (!p.empty()) return {p[0]};
    if (!a_flags.empty()) return a_flags;
    return def;
  };

  std::vector<StatisticSpec> out;
  if (name == "J") {
    for (double a : a_grid({1, 2, 5, 10})) out.push_back(StatisticSpec::J(a, est));
  } else if (name == "R") {
    for (double a : a_grid({0.2, 0.5, 1, 2, 5})) out.push_back(StatisticSpec::R(a, est));
  } else if (name == "Rstd") {
    for (double a : a_grid({0.2, 0.5, 1, 2, 5}))
      out.push_back(StatisticSpec::Rstd(a, std::sqrt(sigma_R2(a)), est));
  } else if (name == "Ibar" || name == "I") {
    double a = 1.0, b = b_flag;
    if (p.size() >= 1) a = p[0];
    else if (!a_flags.empty()) a = a_flags[0];
    if (p.size() >= 2) b = p[1];
    out.push_back(StatisticSpec::Ibar(a, b));
  } else if (name == "KS") {
    out.push_back(StatisticSpec::edf(StatFamily::KS, est));
  } else if (name == "CVM") {
    out.push_back(StatisticSpec::edf(StatFamily::CVM, est));
  } else if (name == "AD") {
    out.push_back(StatisticSpec::edf(StatFamily::AD, est));
  } else if (name == "N1a") {
    out.push_back(StatisticSpec::N1('a'));
  } else if (name == "N1b") {
    out.push_back(StatisticSpec::N1('b'));
  } else {
    throw std::runtime_error("unknown statistic '" + name +
                             "' (use J, R, Rstd, Ibar, KS, CVM, AD, N1a, N1b)");
  }
  return out;
}

std::vector<StatisticSpec> expand_stats(const std::vector<std::string>& tokens,
                                        const std::vector<double>& a_flags,
                                        double b_flag,
                                        EstimatorKind default_est) {
  std::vector<StatisticSpec> out;
  for (const auto& t : tokens) {
    auto part = expand_stat_token(t, a_flags, b_flag, default_est);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// ------------------------------------------------------------------ ingest

// One value per line, or a single-column CSV with an optional header line.
Sample ingest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  Sample out;
  std::string line;
  std::size_t lineno = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() &&
           (line.back() == '\r' || std::isspace(unsigned(line.back()))))
      line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && std::isspace(unsigned(line[start]))) ++start;
    line = line.substr(start);
    if (line.empty()) continue;
    if (!line.empty() && line.back() == ',') line.pop_back();  // 1-col CSV
    std::size_t used = 0;
    double v = 0;
    bool ok = true;
    try {
      v = std::stod(line, &used);
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok || used != line.size()) {
      if (first_content) {  // tolerate a single CSV header line
        first_content = false;
        continue;
      }
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": cannot parse '" + line + "' as a number");
    }
    first_content = false;
    if (!(v > 0.0))
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": nonpositive datum " + line +
                               " (the null support is (0, inf))");
    out.push_back(v);
  }
  if (out.empty()) throw std::runtime_error(path + ": no data values found");
  return out;
}

// ------------------------------------------------------------------ shared

struct CommonFlags {
  std::string format = "text";
  std::size_t reps = 0;  // 0 = subcommand default
  std::uint64_t seed = 0;
  double alpha = 0.05;
  double lambda = 1.0;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LEVYGOF_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
    throw std::runtime_error("LEVYGOF_SEED is not an integer");
  }
  return 20240901;
}

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--reps", f.reps, "Monte Carlo replications");
  cmd->add_option("--seed", f.seed,
                  "RNG seed (default: $LEVYGOF_SEED or 20240901)");
  cmd->add_option("--alpha", f.alpha, "Significance level")
      ->check(CLI::Range(1e-6, 0.5));
  cmd->add_option("--lambda", f.lambda,
                  "Null scale for the simulation (results are scale-invariant)")
      ->check(CLI::PositiveNumber);
}

MCConfig make_mc(const CommonFlags& f, std::size_t default_reps,
                 std::size_t n) {
  MCConfig cfg;
  cfg.replications = f.reps ? f.reps : default_reps;
  cfg.sample_size = n;
  cfg.alpha = f.alpha;
  cfg.seed = f.seed ? f.seed : default_seed();
  cfg.null_lambda = f.lambda;
  return cfg;
}

// ------------------------------------------------------------------ test

int cmd_test(const CommonFlags& f, const std::string& data,
             const std::string& file, bool invert, bool raw,
             const std::string& stat_token, const std::vector<double>& a_flags,
             double b_flag, const std::string& est_name) {
  Sample x;
  std::string source;
  bool inverted = invert;
  if (!file.empty()) {
    x = ingest(file);
    source = file;
  } else if (data == "rainfall") {
    x = rainfall_data();
    source = "rainfall (embedded, n=31)";
  } else if (data == "hillside") {
    // The published results for this dataset are computed on the reciprocals
    // of the yields; that is the default here (override with --raw).
    inverted = !raw;
    x = hillside_data();
    source = "hillside (embedded, n=41)";
  } else {
    throw std::runtime_error("provide --file PATH or --data rainfall|hillside");
  }
  if (raw) inverted = false;
  if (inverted) {
    for (auto& v : x) v = 1.0 / v;
    source += ", analyzed on reciprocals";
  }

  const auto specs =
      expand_stats({stat_token}, a_flags, b_flag, parse_estimator(est_name));
  const auto cfg = make_mc(f, 10000, x.size());
  const auto reports = mc_pvalues(x, specs, cfg);

  bool any_reject = false;
  const OutFormat fmt = parse_format(f.format);
  json jout = json::array();
  if (fmt == OutFormat::Csv)
    std::printf("statistic,observed,p_value,replications,seed,alpha,decision\n");
  for (const auto& rep : reports) {
    any_reject = any_reject || rep.reject;
    const char* decision = rep.reject ? "reject" : "retain";
    switch (fmt) {
      case OutFormat::Text:
        std::printf("data:         %s\n", source.c_str());
        std::printf("statistic:    %s\n", rep.spec.name().c_str());
        std::printf("lambda-hat:   %.10g (%s)\n",
                    estimate_lambda(x, rep.spec.estimator),
                    estimator_name(rep.spec.estimator));
        std::printf("observed:     %.10g\n", rep.observed);
        std::printf("p-value:      %.6g   (%zu replications, seed %llu)\n",
                    rep.p_value, rep.replications,
                    static_cast<unsigned long long>(rep.seed));
        std::printf("decision:     %s H0 at alpha=%g\n\n", decision, f.alpha);
        break;
      case OutFormat::Csv:
        std::printf("%s,%.17g,%.17g,%zu,%llu,%g,%s\n", rep.spec.name().c_str(),
                    rep.observed, rep.p_value, rep.replications,
                    static_cast<unsigned long long>(rep.seed), f.alpha,
                    decision);
        break;
      case OutFormat::Json:
        jout.push_back({{"data", source},
                        {"statistic", rep.spec.name()},
                        {"observed", rep.observed},
                        {"p_value", rep.p_value},
                        {"replications", rep.replications},
                        {"seed", rep.seed},
                        {"alpha", f.alpha},
                        {"reject", rep.reject}});
        break;
    }
  }
  if (fmt == OutFormat::Json) std::printf("%s\n", jout.dump(2).c_str());
  return any_reject ? 1 : 0;
}

// ------------------------------------------------------------------ critvals

int cmd_critvals(const CommonFlags& f, const std::vector<std::string>& stats,
                 const std::vector<double>& a_flags,
                 std::vector<std::size_t> ns) {
  if (ns.empty())
    for (std::size_t n = 20; n <= 500; n += 20) ns.push_back(n);
  // Appendix-style columns: each statistic under both estimators.
  std::vector<StatisticSpec> specs;
  for (auto e : {EstimatorKind::MLE, EstimatorKind::MBE}) {
    auto part = expand_stats(stats, a_flags, 1.0, e);
    specs.insert(specs.end(), part.begin(), part.end());
  }
  OutTable t;
  t.title = "95% critical values of sqrt(n)*T (absolute value for R)";
  t.row_header = "n";
  for (const auto& s : specs) {
    std::string c = s.name();
    if (c.find("@mbe") == std::string::npos) c += "@mle";
    t.cols.push_back(c);
  }
  bool any_R = false;
  for (const auto& s : specs)
    any_R = any_R || s.family == StatFamily::R || s.family == StatFamily::Rstd;

  for (std::size_t n : ns) {
    const auto cfg = make_mc(f, 100000, n);
    const auto nulls = mc_null_distributions(specs, cfg);
    std::vector<double> row;
    for (std::size_t s = 0; s < specs.size(); ++s) {
      std::vector<double> sorted = nulls[s];
      if (specs[s].tail() == Tail::TwoSidedAbs) {
        for (auto& v : sorted) v = std::fabs(v);
        std::sort(sorted.begin(), sorted.end());
      }
      row.push_back(std::sqrt(double(n)) *
                    critical_value(sorted, Tail::Upper, f.alpha));
    }
    t.rows.push_back(std::to_string(n));
    t.cells.push_back(std::move(row));
  }
  // Asymptotic row for R: the 1-alpha quantile of |N(0, sigma_R^2)|.
  if (any_R) {
    std::vector<double> row;
    const double z = normal_quantile(1.0 - f.alpha / 2.0);
    for (const auto& s : specs)
      row.push_back(s.family == StatFamily::R ? z * std::sqrt(sigma_R2(s.a))
                    : s.family == StatFamily::Rstd ? z
                    : std::numeric_limits<double>::quiet_NaN());
    t.rows.push_back("inf");
    t.cells.push_back(std::move(row));
  }
  t.render(parse_format(f.format));
  return 0;
}

// ------------------------------------------------------------------ power

int cmd_power(const CommonFlags& f, const std::vector<std::string>& alts,
              const std::vector<std::string>& stats,
              const std::vector<double>& a_flags, double b_flag,
              std::vector<std::size_t> ns, const std::string& est_name) {
  if (ns.empty()) ns = {25, 50};
  const auto specs = expand_stats(stats, a_flags, b_flag,
                                  parse_estimator(est_name));
  std::vector<std::pair<AlternativeSpec, std::size_t>> rows;
  for (const auto& alt : alts)
    for (std::size_t n : ns) rows.emplace_back(parse_alt(alt), n);

  // mc_table needs one config; sample size varies per row internally.
  const auto cfg = make_mc(f, 10000, ns[0]);
  const auto table = mc_table(specs, rows, cfg);

  OutTable t;
  t.title = "Empirical rejection rates at alpha=" + std::to_string(f.alpha);
  t.row_header = "alternative/n";
  t.cols = table.col_names;
  for (std::size_t r = 0; r < rows.size(); ++r)
    t.rows.push_back(table.row_names[r] + " n=" +
                     std::to_string(table.row_sizes[r]));
  t.cells = table.cells;
  t.precision = 4;
  const OutFormat fmt = parse_format(f.format);
  if (fmt == OutFormat::Json) {
    json j;
    j["title"] = t.title;
    j["columns"] = t.cols;
    j["rows"] = t.rows;
    j["cells"] = t.cells;
    j["standard_errors"] = table.standard_errors;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    t.render(fmt);
  }
  return 0;
}

// ------------------------------------------------------------------ efficiency

int cmd_efficiency(const CommonFlags& f, const std::vector<std::string>& stats,
                   const std::vector<double>& a_flags, double b_flag,
                   std::vector<std::string> alts) {
  if (alts.empty()) alts = {"g1(10)", "g2", "g3(3)", "g4", "g5"};
  const auto specs = expand_stats(stats, a_flags, b_flag, EstimatorKind::MLE);
  std::vector<AlternativeSpec> alt_specs;
  for (const auto& a : alts) alt_specs.push_back(parse_alt(a));

  if (specs.size() == 1 && alt_specs.size() == 1) {
    const auto r = efficiency(specs[0], alt_specs[0]);
    switch (parse_format(f.format)) {
      case OutFormat::Text:
        std::printf("statistic:          %s\n", specs[0].name().c_str());
        std::printf("alternative:        %s\n", alt_specs[0].name().c_str());
        std::printf("KL curvature:       %.8g\n", r.kl);
        std::printf("slope coefficient:  %.8g\n", r.slope_coefficient);
        std::printf("efficiency:         %.4f\n", r.efficiency);
        break;
      case OutFormat::Csv:
        std::printf("statistic,alternative,kl,slope_coefficient,efficiency\n");
        std::printf("%s,%s,%.17g,%.17g,%.17g\n", specs[0].name().c_str(),
                    alt_specs[0].name().c_str(), r.kl, r.slope_coefficient,
                    r.efficiency);
        break;
      case OutFormat::Json: {
        json j = {{"statistic", specs[0].name()},
                  {"alternative", alt_specs[0].name()},
                  {"kl", r.kl},
                  {"slope_coefficient", r.slope_coefficient},
                  {"efficiency", r.efficiency}};
        std::printf("%s\n", j.dump(2).c_str());
        break;
      }
    }
    return 0;
  }

  const auto table = efficiency_table(specs, alt_specs);
  OutTable t;
  t.title = "Local approximate Bahadur efficiencies";
  t.row_header = "statistic";
  for (const auto& a : alt_specs) t.cols.push_back(a.name());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    t.rows.push_back(specs[i].name());
    std::vector<double> row;
    for (const auto& cell : table[i]) row.push_back(cell.efficiency);
    t.cells.push_back(std::move(row));
  }
  t.precision = 4;
  t.render(parse_format(f.format));
  return 0;
}

// ------------------------------------------------------------------ constants

int cmd_constants(const CommonFlags& f, const std::string& dump_curve,
                  double curve_a, const std::string& curve_alt,
                  std::size_t curve_points) {
  const OutFormat fmt = parse_format(f.format);
  if (!dump_curve.empty()) {
    // (t, value) pairs for external plotting: K = diagonal covariance
    // K(t,t), A = Bahadur slope numerator A(t) for --curve-alt.
    OutTable t;
    t.row_header = "t";
    t.cols = {dump_curve == "K" ? "K(t,t)" : "A(t)"};
    t.precision = 8;
    std::optional<AlternativeSpec> alt;
    if (dump_curve == "A") alt = parse_alt(curve_alt);
    for (std::size_t i = 1; i < curve_points; ++i) {
      const double tt = double(i) / double(curve_points);
      const double v = dump_curve == "K" ? cov_kernel(tt, tt, curve_a)
                                         : bahadur_A(tt, curve_a, *alt);
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.6f", tt);
      t.rows.push_back(buf);
      t.cells.push_back({v});
    }
    t.render(fmt);
    return 0;
  }

  const double z = normal_quantile(1.0 - f.alpha / 2.0);
  OutTable vr;
  vr.title = "Asymptotic variance of sqrt(n)*R_a and its half-normal quantile";
  vr.row_header = "a";
  vr.cols = {"sigma_R^2(a)", "q_{1-alpha}|HN|"};
  vr.precision = 7;
  for (double a : {0.2, 0.5, 1.0, 2.0, 5.0}) {
    const double v = sigma_R2(a);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%g", a);
    vr.rows.push_back(buf);
    vr.cells.push_back({v, z * std::sqrt(v)});
  }

  OutTable vt;
  vt.title = "Asymptotic variance of sqrt(n)*Ibar[a,b]";
  vt.row_header = "a,b";
  vt.cols = {"sigma_0^2(a,b)"};
  vt.precision = 7;
  const double ab[][2] = {{1, 1}, {1, 2},  {1, 10}, {2, 5},
                          {3, 7}, {4, 5},  {6, 8},  {10, 10}};
  for (const auto& p : ab) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g,%g", p[0], p[1]);
    vt.rows.push_back(buf);
    vt.cells.push_back({sigma_0ab(p[0], p[1])});
  }

  if (fmt == OutFormat::Json) {
    json j;
    j["sigma_R2"] = json::object();
    for (std::size_t i = 0; i < vr.rows.size(); ++i)
      j["sigma_R2"][vr.rows[i]] = vr.cells[i][0];
    j["halfnormal_quantile"] = json::object();
    for (std::size_t i = 0; i < vr.rows.size(); ++i)
      j["halfnormal_quantile"][vr.rows[i]] = vr.cells[i][1];
    j["sigma_0ab"] = json::object();
    for (std::size_t i = 0; i < vt.rows.size(); ++i)
      j["sigma_0ab"][vt.rows[i]] = vt.cells[i][0];
    j["sup_K_diag_a1"] = 0.0;  // filled below
    double supK = sup_on_unit_interval(
        [](double t) { return cov_kernel(t, t, 1.0); });
    j["sup_K_diag_a1"] = supK;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    vr.render(fmt);
    std::printf("\n");
    vt.render(fmt);
    const double supK = sup_on_unit_interval(
        [](double t) { return cov_kernel(t, t, 1.0); });
    std::printf("\nsup_t K(t,t) at a=1: %.8g\n", supK);
  }
  return 0;
}

// ------------------------------------------------------------------ datasets

int cmd_datasets(const CommonFlags& f, const std::string& name, bool invert) {
  struct Entry {
    std::string name;
    Sample values;
    std::string note;
  };
  std::vector<Entry> entries;
  if (name.empty() || name == "rainfall")
    entries.push_back({"rainfall", rainfall_data(),
                       "weighted average monthly rainfall; analyzed as printed"});
  if (name.empty() || name == "hillside")
    entries.push_back({"hillside",
                       invert ? hillside_data_inverted() : hillside_data(),
                       invert ? "well yields, reciprocals (as analyzed)"
                              : "well yields in gal/min/ft (as printed; the "
                                "published analysis uses the reciprocals)"});
  if (entries.empty())
    throw std::runtime_error("unknown dataset '" + name +
                             "' (use rainfall or hillside)");
  const OutFormat fmt = parse_format(f.format);
  if (fmt == OutFormat::Json) {
    json j = json::array();
    for (const auto& e : entries)
      j.push_back({{"name", e.name},
                   {"n", e.values.size()},
                   {"note", e.note},
                   {"values", e.values}});
    std::printf("%s\n", j.dump(2).c_str());
  } else if (fmt == OutFormat::Csv) {
    std::printf("dataset,value\n");
    for (const auto& e : entries)
      for (double v : e.values) std::printf("%s,%.17g\n", e.name.c_str(), v);
  } else {
    for (const auto& e : entries) {
      std::printf("%s (n=%zu): %s\n", e.name.c_str(), e.values.size(),
                  e.note.c_str());
      for (std::size_t i = 0; i < e.values.size(); ++i)
        std::printf("%s%.10g", i ? " " : "  ", e.values[i]);
      std::printf("\n\n");
    }
  }
  return 0;
}

}  // namespace

// ======================================================================= main

int main(int argc, char** argv) {
  CLI::App app{
      "Goodness-of-fit tests for the Levy distribution with unknown scale"};
  app.require_subcommand(1);

  CommonFlags f;
  std::vector<std::string> stats;
  std::vector<double> a_flags;
  double b_flag = 1.0;
  std::string est_name = "mle";
  std::vector<std::size_t> ns;

  // ---- test
  std::string data, file, stat_token = "R(1)";
  bool invert = false, raw = false;
  auto* t = app.add_subcommand("test", "Test a sample against the Levy null");
  add_common(t, f);
  t->add_option("--data", data, "Embedded dataset: rainfall or hillside")
      ->check(CLI::IsMember({"rainfall", "hillside"}));
  t->add_option("--file", file,
                "Input file (one value per line or single-column CSV)");
  t->add_flag("--invert", invert, "Analyze reciprocals 1/x of the input");
  t->add_flag("--raw", raw,
              "Analyze the values as given (disables the hillside default "
              "inversion)");
  t->add_option("--stat", stat_token,
                "Statistic, e.g. J(1), R(0.5), Ibar(1,2), KS, N1a");
  t->add_option("--a", a_flags, "Tuning parameter(s) for a bare --stat J|R");
  t->add_option("--b", b_flag, "Second Ibar tuning parameter");
  t->add_option("--estimator", est_name, "Scale estimator: mle or mbe")
      ->check(CLI::IsMember({"mle", "mbe", "med"}));

  // ---- critvals
  auto* c = app.add_subcommand(
      "critvals", "Simulated critical values of sqrt(n)*T (both estimators)");
  add_common(c, f);
  c->add_option("--stat", stats, "Statistic families/tokens (default: J R)");
  c->add_option("--a", a_flags, "Tuning parameter grid override");
  c->add_option("--n", ns, "Sample sizes (default: 20,40,...,500)");

  // ---- power
  std::vector<std::string> alts;
  auto* p = app.add_subcommand("power",
                               "Empirical power against fixed alternatives");
  add_common(p, f);
  p->add_option("--alt", alts,
                "Alternatives, e.g. weibull(2,1) lognormal(0,1) "
                "burr(1.5,0.5,0.5)")
      ->required();
  p->add_option("--stat", stats, "Statistic tokens (default: full battery)");
  p->add_option("--a", a_flags, "Tuning parameter grid override");
  p->add_option("--b", b_flag, "Second Ibar tuning parameter");
  p->add_option("--n", ns, "Sample sizes (default: 25 50)");
  p->add_option("--estimator", est_name, "Default estimator for bare tokens")
      ->check(CLI::IsMember({"mle", "mbe", "med"}));

  // ---- efficiency
  std::vector<std::string> eff_alts;
  auto* e = app.add_subcommand(
      "efficiency", "Local approximate Bahadur efficiencies (J, R, Ibar)");
  add_common(e, f);
  e->add_option("--stat", stats, "Statistic tokens (default: J R)");
  e->add_option("--a", a_flags, "Tuning parameter grid override");
  e->add_option("--b", b_flag, "Second Ibar tuning parameter");
  e->add_option("--alt", eff_alts,
                "Local alternatives (default: g1(10) g2 g3(3) g4 g5)");

  // ---- constants
  std::string dump_curve, curve_alt = "g2";
  double curve_a = 1.0;
  std::size_t curve_points = 1000;
  auto* k = app.add_subcommand("constants",
                               "Asymptotic variance constants and curves");
  add_common(k, f);
  k->add_option("--dump-curve", dump_curve,
                "Emit (t, value) pairs: K = covariance diagonal, A = slope "
                "numerator")
      ->check(CLI::IsMember({"K", "A"}));
  k->add_option("--a", curve_a, "Tuning parameter for the curve");
  k->add_option("--alt", curve_alt, "Alternative for --dump-curve A");
  k->add_option("--points", curve_points, "Curve grid resolution");

  // ---- datasets
  std::string ds_name;
  bool ds_invert = false;
  auto* d = app.add_subcommand("datasets", "Print the embedded datasets");
  add_common(d, f);
  d->add_option("--name", ds_name, "rainfall or hillside (default: both)");
  d->add_flag("--invert", ds_invert, "Print reciprocals (hillside analysis)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? 0 : 2;  // flag errors map to the error exit code
  }

  try {
    if (t->parsed())
      return cmd_test(f, data, file, invert, raw, stat_token, a_flags, b_flag,
                      est_name);
    if (c->parsed()) {
      if (stats.empty()) stats = {"J", "R"};
      return cmd_critvals(f, stats, a_flags, ns);
    }
    if (p->parsed()) {
      if (stats.empty())
        stats = {"J", "R", "KS", "CVM", "AD", "Ibar", "N1a", "N1b"};
      return cmd_power(f, alts, stats, a_flags, b_flag, ns, est_name);
    }
    if (e->parsed()) {
      if (stats.empty()) stats = {"J", "R"};
      return cmd_efficiency(f, stats, a_flags, b_flag, eff_alts);
    }
    if (k->parsed())
      return cmd_constants(f, dump_curve, curve_a, curve_alt, curve_points);
    if (d->parsed()) return cmd_datasets(f, ds_name, ds_invert);
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 2;
  }
  return 2;
}
