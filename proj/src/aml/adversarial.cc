// aml/adversarial.cc

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

#include "aml/adversarial.h"

#include <cassert>

#include "aml/loss.h"

namespace aml {

AdversarialPairSet::AdversarialPairSet(Matrix left, Matrix right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.rows() != right_.rows() || left_.cols() != right_.cols())
    throw InvalidInputError("AdversarialPairSet: left/right shape mismatch");
  if (!left_.allFinite() || !right_.allFinite())
    throw InvalidInputError("AdversarialPairSet: non-finite entries");
}

LabeledPairSet AdversarialPairSet::WithLabels(
    const Eigen::VectorXi &labels) const {
  return LabeledPairSet(left_, right_, labels);
}

AdversarialPairSet AdversarialPairSet::FromPairSet(const LabeledPairSet &p) {
  return AdversarialPairSet(p.left(), p.right());
}

AdversarialPairSet generate_adversarial(const MetricMatrix &m,
                                        const LabeledPairSet &x, double beta) {
  if (beta <= 0)
    throw InvalidInputError("generate_adversarial: beta must be positive");
  if (x.dim() != m.dim())
    throw InvalidInputError("generate_adversarial: dimension mismatch");
  const EigenDecomposition &e = m.eigen();
  const Matrix &u = e.eigenvectors;
  Matrix pi(x.dim(), x.count());
  Matrix pip(x.dim(), x.count());
  for (Index i = 0; i < x.count(); ++i) {
    const int y = x.labels()(i);
    Vector xl = u.transpose() * x.left().col(i);
    Vector xr = u.transpose() * x.right().col(i);
    Vector pl(x.dim()), pr(x.dim());
    for (Index j = 0; j < x.dim(); ++j) {
      const double lambda = e.eigenvalues(j);
      // In the eigenbasis the linear system decouples: with
      // w = beta lambda^{1+y}, pi = (xbar + w x) / (2 + w).
      const double w = beta * (y == 1 ? lambda * lambda : 1.0);
      assert(2.0 + w > 0);
      const double xbar = xl(j) + xr(j);
      pl(j) = (xbar + w * xl(j)) / (2.0 + w);
      pr(j) = (xbar + w * xr(j)) / (2.0 + w);
    }
    pi.col(i) = u * pl;
    pip.col(i) = u * pr;
  }
  return AdversarialPairSet(std::move(pi), std::move(pip));
}

double confusion_objective(const MetricMatrix &m, const AdversarialPairSet &pi,
                           const LabeledPairSet &x, double beta) {
  if (beta <= 0)
    throw InvalidInputError("confusion_objective: beta must be positive");
  if (pi.dim() != x.dim() || pi.count() != x.count())
    throw InvalidInputError("confusion_objective: misaligned pair sets");
  LabeledPairSet adv = pi.WithLabels(x.labels());
  return flipped_loss(m, adv, true) + beta * pairset_distance(m, x, pi);
}

double confusion_stationarity_residual(const MetricMatrix &m,
                                       const AdversarialPairSet &pi,
                                       const LabeledPairSet &x, double beta) {
  if (pi.dim() != x.dim() || pi.count() != x.count())
    throw InvalidInputError(
        "confusion_stationarity_residual: misaligned pair sets");
  double sq = 0.0;
  for (Index i = 0; i < x.count(); ++i) {
    const int y = x.labels()(i);
    const Matrix &my = (y == 1) ? m.inverse() : m.mat();
    Vector d = pi.diff(i);
    Vector r1 = my * d + beta * (m.mat() * (pi.left().col(i) - x.left().col(i)));
    Vector r2 = -(my * d) +
                beta * (m.mat() * (pi.right().col(i) - x.right().col(i)));
    sq += r1.squaredNorm() + r2.squaredNorm();
  }
  return std::sqrt(sq);
}

}  // namespace aml
