// Hot inner loop of the J statistic, isolated so it can be compiled with
// -ffast-math (enabling the glibc vectorized exp). Only additions and exp
// evaluations happen here; the tolerance-sensitive logic stays outside.

#include <cmath>
#include <cstddef>

namespace levygof::detail {

void j_accumulate(const double* y, std::size_t n, const double* c4, double* m4,
                  double* m1, std::size_t G) {
  for (std::size_t i = 0; i < n; ++i) {
    const double yi = y[i];
#pragma omp simd
    for (std::size_t k = 0; k < G; ++k) {
      const double e = exp(c4[k] * yi);  // t_k^{y_i/4}
      const double e2 = e * e;
      m4[k] += e;
      m1[k] += e2 * e2;  // t_k^{y_i}
    }
  }
}

}  // namespace levygof::detail
