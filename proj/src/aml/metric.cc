// aml/metric.cc

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

#include "aml/metric.h"

#include <string>

#include "aml/adversarial.h"

namespace aml {

MetricMatrix::MetricMatrix(SymMatrix base, EigenDecomposition e, double floor)
    : base_(std::move(base)), eigen_(std::move(e)), floor_(floor) {
  if (floor_ <= 0)
    throw InvalidInputError("MetricMatrix: floor must be positive");
  if (eigen_.eigenvalues.minCoeff() < floor_)
    throw NotPositiveDefiniteError(
        "MetricMatrix: eigenvalue " +
        std::to_string(eigen_.eigenvalues.minCoeff()) + " below floor " +
        std::to_string(floor_));
  inverse_ = eigen_.eigenvectors *
             eigen_.eigenvalues.cwiseInverse().asDiagonal() *
             eigen_.eigenvectors.transpose();
}

MetricMatrix MetricMatrix::FromMatrix(const SymMatrix &m, double floor) {
  return MetricMatrix(m, sym_eigen(m), floor);
}

MetricMatrix MetricMatrix::FromEigen(const EigenDecomposition &e,
                                     double floor) {
  return MetricMatrix(SymMatrix(e.Reconstruct()), e, floor);
}

MetricMatrix MetricMatrix::Identity(Index dim, double floor) {
  return FromMatrix(SymMatrix::Identity(dim), floor);
}

LabeledPairSet::LabeledPairSet(Matrix left, Matrix right,
                               Eigen::VectorXi labels)
    : left_(std::move(left)), right_(std::move(right)),
      labels_(std::move(labels)) {
  if (left_.rows() != right_.rows() || left_.cols() != right_.cols())
    throw InvalidInputError("LabeledPairSet: left/right shape mismatch");
  if (labels_.size() != left_.cols())
    throw InvalidInputError("LabeledPairSet: label count mismatch");
  if (left_.cols() < 1)
    throw InvalidInputError("LabeledPairSet: at least one pair required");
  if (!left_.allFinite() || !right_.allFinite())
    throw InvalidInputError("LabeledPairSet: non-finite features");
  for (Index i = 0; i < labels_.size(); ++i) {
    if (labels_(i) != 1 && labels_(i) != -1)
      throw InvalidInputError("LabeledPairSet: label at " + std::to_string(i) +
                              " must be +1 or -1");
    if (labels_(i) == 1) ++similar_count_;
  }
}

static void check_dims(const MetricMatrix &m, const Vector &x,
                       const Vector &xp) {
  if (x.size() != m.dim() || xp.size() != m.dim())
    throw InvalidInputError("mahalanobis: dimension mismatch");
}

double mahalanobis(const MetricMatrix &m, const Vector &x, const Vector &xp) {
  check_dims(m, x, xp);
  Vector d = x - xp;
  return d.dot(m.mat() * d);
}

double inverse_mahalanobis(const MetricMatrix &m, const Vector &x,
                           const Vector &xp) {
  check_dims(m, x, xp);
  Vector d = x - xp;
  return d.dot(m.inverse() * d);
}

double pairset_distance(const MetricMatrix &m, const LabeledPairSet &x,
                        const AdversarialPairSet &pi) {
  if (pi.dim() != x.dim() || pi.count() != x.count())
    throw InvalidInputError("pairset_distance: misaligned pair sets");
  double total = 0.0;
  for (Index i = 0; i < x.count(); ++i) {
    total += mahalanobis(m, x.left().col(i), pi.left().col(i));
    total += mahalanobis(m, x.right().col(i), pi.right().col(i));
  }
  return total;
}

}  // namespace aml
