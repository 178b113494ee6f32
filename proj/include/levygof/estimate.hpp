#pragma once
// Scale-parameter estimators for the Lévy null family.

#include "levygof/dist.hpp"

namespace levygof {

enum class EstimatorKind { MLE, MBE };

inline const char* estimator_name(EstimatorKind k) {
  return k == EstimatorKind::MLE ? "mle" : "mbe";
}

// MLE: n / sum(1/X_k).  MBE: 2*(erfcinv(1/2))^2 * median.
double estimate_lambda(const Sample& sample, EstimatorKind kind);

}  // namespace levygof
