// aml/metric.h

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

#ifndef AML_METRIC_H_
#define AML_METRIC_H_

#include <Eigen/Dense>

#include "aml/linalg.h"

namespace aml {

class AdversarialPairSet;

/// SPD metric with its eigendecomposition and inverse cached. All
/// eigenvalues are at least `floor` (> 0), so the inverse always exists.
class MetricMatrix {
 public:
  static MetricMatrix FromMatrix(const SymMatrix &m,
                                 double floor = kDefaultEigFloor);
  /// Trusted path for callers that already hold the decomposition (the
  /// solver after a projection step). The base matrix is rebuilt from it.
  static MetricMatrix FromEigen(const EigenDecomposition &e,
                                double floor = kDefaultEigFloor);
  static MetricMatrix Identity(Index dim, double floor = kDefaultEigFloor);

  Index dim() const { return base_.dim(); }
  double floor() const { return floor_; }
  const SymMatrix &base() const { return base_; }
  const Matrix &mat() const { return base_.mat(); }
  const EigenDecomposition &eigen() const { return eigen_; }
  const Matrix &inverse() const { return inverse_; }

 private:
  MetricMatrix(SymMatrix base, EigenDecomposition e, double floor);

  SymMatrix base_;
  EigenDecomposition eigen_;
  Matrix inverse_;
  double floor_;
};

/// Training pairs: columns of `left` and `right` are x_i and x'_i, labels
/// are +1 (similar) / -1 (dissimilar).
class LabeledPairSet {
 public:
  LabeledPairSet(Matrix left, Matrix right, Eigen::VectorXi labels);

  Index dim() const { return left_.rows(); }
  Index count() const { return left_.cols(); }
  const Matrix &left() const { return left_; }
  const Matrix &right() const { return right_; }
  const Eigen::VectorXi &labels() const { return labels_; }

  Vector diff(Index i) const { return left_.col(i) - right_.col(i); }
  Vector sum(Index i) const { return left_.col(i) + right_.col(i); }

  Index similar_count() const { return similar_count_; }
  Index dissimilar_count() const { return count() - similar_count_; }

 private:
  Matrix left_, right_;
  Eigen::VectorXi labels_;
  Index similar_count_ = 0;
};

/// Squared Mahalanobis distance (x - x')^T M (x - x').
double mahalanobis(const MetricMatrix &m, const Vector &x, const Vector &xp);

/// Squared Mahalanobis distance under M^{-1}.
double inverse_mahalanobis(const MetricMatrix &m, const Vector &x,
                           const Vector &xp);

/// Sum over pairs of Dist_M(x_i, pi_i) + Dist_M(x'_i, pi'_i), accumulated
/// left to right.
double pairset_distance(const MetricMatrix &m, const LabeledPairSet &x,
                        const AdversarialPairSet &pi);

}  // namespace aml

#endif  // AML_METRIC_H_
