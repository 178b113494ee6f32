#include "levygof/estimate.hpp"

#include <algorithm>
#include <cmath>

#include "levygof/special.hpp"

namespace levygof {

double estimate_lambda(const Sample& sample, EstimatorKind kind) {
  if (sample.empty())
    throw std::domain_error("estimate_lambda: empty sample");
  for (double x : sample)
    if (!(x > 0.0) || !std::isfinite(x))
      throw std::domain_error("estimate_lambda: sample must be positive");

  if (kind == EstimatorKind::MLE) {
    double s = 0.0;
    for (double x : sample) s += 1.0 / x;
    if (!std::isfinite(s))
      throw std::overflow_error("estimate_lambda: sum of reciprocals overflowed");
    return static_cast<double>(sample.size()) / s;
  }

  // MBE: even-n median is the midpoint of the central order statistics.
  Sample sorted(sample);
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  const double med = (n % 2 == 1)
                         ? sorted[n / 2]
                         : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  return mbe_constant() * med;
}

}  // namespace levygof
