// Benchmark: OpenMP-parallel Monte Carlo engine vs the serial reference.
//
// Usage: bench_mc [n] [replications]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "levygof/mc.hpp"

using namespace levygof;

namespace {
template <typename F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}
}  // namespace

int main(int argc, char** argv) {
  MCConfig cfg;
  cfg.sample_size = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 100;
  cfg.replications = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 2000;
  cfg.seed = 20240901;

  const std::vector<StatisticSpec> specs = {
      StatisticSpec::J(1.0), StatisticSpec::J(2.0), StatisticSpec::R(0.5),
      StatisticSpec::R(1.0), StatisticSpec::edf(StatFamily::KS)};

  std::printf("n=%zu, N=%zu, specs=%zu, omp_max_threads=%d\n",
              cfg.sample_size, cfg.replications, specs.size(),
              omp_get_max_threads());

  std::vector<std::vector<double>> par, ser;
  const double tp = timed([&] { par = mc_null_distributions(specs, cfg); });
  const double ts =
      timed([&] { ser = mc_null_distributions_serial(specs, cfg); });

  std::printf("parallel engine: %.3f s\n", tp);
  std::printf("serial reference: %.3f s\n", ts);
  std::printf("speedup: %.2fx\n", ts / tp);

  // Sanity: the two engines must agree to floating-point noise.
  double max_diff = 0.0;
  for (std::size_t s = 0; s < specs.size(); ++s)
    for (std::size_t r = 0; r < cfg.replications; ++r)
      max_diff = std::max(max_diff, std::fabs(par[s][r] - ser[s][r]));
  std::printf("max |parallel - serial| over sorted nulls: %.3g\n", max_diff);
  return max_diff < 1e-12 ? 0 : 1;
}
