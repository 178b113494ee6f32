#pragma once
// Counter-based deterministic RNG streams.
//
// Each (seed, stream_id) pair yields an independent, reproducible stream:
// the pair is mixed through splitmix64 into a mt19937_64 seed, so replication
// r of a Monte Carlo run always sees the same draws regardless of how the
// replications are distributed over threads.

#include <cstdint>
#include <random>

#include "levygof/special.hpp"

namespace levygof {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id) {
    std::uint64_t s = seed;
    std::uint64_t a = detail::splitmix64(s);
    s ^= stream_id * 0xda942042e4dd58b5ULL + 0x9e3779b97f4a7c15ULL;
    std::uint64_t b = detail::splitmix64(s);
    engine_.seed(a ^ (b + 0x165667b19e3779f9ULL));
  }

  // Uniform on (0, 1), never returning the endpoints.
  double uniform() {
    // 53-bit mantissa draw shifted into (0,1): (k + 0.5) * 2^-53.
    const std::uint64_t k = engine_() >> 11;
    return (static_cast<double>(k) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via inverse CDF (fixed draw count: one uniform each).
  double normal() { return normal_quantile(uniform()); }

  // Gamma(shape, scale 1) via Marsaglia–Tsang, with the standard boost for
  // shape < 1.
  double gamma(double shape) {
    if (shape < 1.0) {
      const double u = uniform();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace levygof
