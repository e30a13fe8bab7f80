// aml/loss.cc

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

#include "aml/loss.h"

namespace aml {

ScatterStats scatter_stats(const LabeledPairSet &p) {
  Matrix a = Matrix::Zero(p.dim(), p.dim());
  Matrix b = Matrix::Zero(p.dim(), p.dim());
  for (Index i = 0; i < p.count(); ++i) {
    Vector d = p.diff(i);
    if (p.labels()(i) == 1)
      a.noalias() += d * d.transpose();
    else
      b.noalias() += d * d.transpose();
  }
  return ScatterStats{SymMatrix(a), SymMatrix(b)};
}

double geometric_mean_loss(const MetricMatrix &m, const LabeledPairSet &p) {
  return flipped_loss(m, p, false);
}

double flipped_loss(const MetricMatrix &m, const LabeledPairSet &p,
                    bool flip) {
  if (p.dim() != m.dim())
    throw InvalidInputError("flipped_loss: dimension mismatch");
  double total = 0.0;
  for (Index i = 0; i < p.count(); ++i) {
    int label = flip ? -p.labels()(i) : p.labels()(i);
    Vector d = p.diff(i);
    if (label == 1)
      total += d.dot(m.mat() * d);
    else
      total += d.dot(m.inverse() * d);
  }
  return total;
}

double spectral_weight(double lambda, int label, double beta) {
  if (label == 1) {
    double den = 2.0 + beta * lambda * lambda;
    return beta * beta * std::pow(lambda, 5) / (den * den);
  }
  double den = 2.0 + beta;
  return beta * beta / (lambda * den * den);
}

double spectral_weight_derivative(double lambda, int label, double beta) {
  if (label == 1) {
    double den = 2.0 + beta * lambda * lambda;
    return beta * beta * std::pow(lambda, 4) * (10.0 + beta * lambda * lambda) /
           (den * den * den);
  }
  double den = 2.0 + beta;
  return -beta * beta / (lambda * lambda * den * den);
}

double adversarial_spectral_loss(const MetricMatrix &m,
                                 const LabeledPairSet &p, double beta) {
  if (beta <= 0)
    throw InvalidInputError("adversarial_spectral_loss: beta must be positive");
  if (p.dim() != m.dim())
    throw InvalidInputError("adversarial_spectral_loss: dimension mismatch");
  const EigenDecomposition &e = m.eigen();
  double total = 0.0;
  for (Index i = 0; i < p.count(); ++i) {
    Vector c = e.eigenvectors.transpose() * p.diff(i);
    int label = p.labels()(i);
    double term = 0.0;
    for (Index j = 0; j < e.dim(); ++j)
      term += spectral_weight(e.eigenvalues(j), label, beta) * c(j) * c(j);
    total += term;
  }
  return total;
}

}  // namespace aml
