// aml/adversarial.h

// Copyright 2026  AML Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef AML_ADVERSARIAL_H_
#define AML_ADVERSARIAL_H_

#include "aml/metric.h"

namespace aml {

/// Worst-case pairs (pi_i, pi'_i), index-aligned with the training pair set
/// they were generated from.
class AdversarialPairSet {
 public:
  AdversarialPairSet(Matrix left, Matrix right);

  Index dim() const { return left_.rows(); }
  Index count() const { return left_.cols(); }
  const Matrix &left() const { return left_; }
  const Matrix &right() const { return right_; }
  Vector diff(Index i) const { return left_.col(i) - right_.col(i); }

  /// View the pairs as a labeled set (used when evaluating losses on them).
  LabeledPairSet WithLabels(const Eigen::VectorXi &labels) const;

  static AdversarialPairSet FromPairSet(const LabeledPairSet &p);

 private:
  Matrix left_, right_;
};

/// Closed-form minimizer of the confusion objective:
///   pi_i  = (2 M^{-y_i} + beta M)^{-1} (M^{-y_i} xbar_i + beta M x_i)
/// and symmetrically for pi'_i, where M^{-y_i} is M^{-1} for similar pairs
/// and M for dissimilar ones. Solved per eigen-direction of M.
AdversarialPairSet generate_adversarial(const MetricMatrix &m,
                                        const LabeledPairSet &x, double beta);

/// Confusion objective C_M(Pi) = L(M, Pi, -y) + beta Dist_M(X, Pi).
double confusion_objective(const MetricMatrix &m, const AdversarialPairSet &pi,
                           const LabeledPairSet &x, double beta);

/// Euclidean norm of the stacked stationarity residuals
///   M^{-y_i}(pi_i - pi'_i) + beta M (pi_i - x_i)   (and the primed row).
/// Zero exactly at the closed-form minimizer.
double confusion_stationarity_residual(const MetricMatrix &m,
                                       const AdversarialPairSet &pi,
                                       const LabeledPairSet &x, double beta);

}  // namespace aml

#endif  // AML_ADVERSARIAL_H_
