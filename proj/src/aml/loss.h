// aml/loss.h

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

#ifndef AML_LOSS_H_
#define AML_LOSS_H_

#include "aml/metric.h"

namespace aml {

/// Scatter matrices of the pair differences: `similar` (A) sums
/// xhat xhat^T over y = +1, `dissimilar` (B) over y = -1.
struct ScatterStats {
  SymMatrix similar;
  SymMatrix dissimilar;
};

ScatterStats scatter_stats(const LabeledPairSet &p);

/// Geometric-mean loss: sum of Dist_M over similar pairs plus Dist_{M^-1}
/// over dissimilar pairs. Equals trace(M A) + trace(M^-1 B).
double geometric_mean_loss(const MetricMatrix &m, const LabeledPairSet &p);

/// geometric_mean_loss with every label negated when `flip` is set.
double flipped_loss(const MetricMatrix &m, const LabeledPairSet &p, bool flip);

// Per-eigenvalue weight of the worst-case-pair loss and its derivative in
// lambda. The exponents are fixed by requiring that the spectral evaluation
// equal the geometric-mean loss of the closed-form worst-case pairs:
//   y = +1:  beta^2 lambda^5 / (2 + beta lambda^2)^2
//   y = -1:  beta^2 / (lambda (2 + beta)^2)
double spectral_weight(double lambda, int label, double beta);
double spectral_weight_derivative(double lambda, int label, double beta);

/// Loss of the closed-form worst-case pairs in spectral form:
/// sum_i xhat_i^T U h_i(Lambda) U^T xhat_i with h_i = spectral_weight.
double adversarial_spectral_loss(const MetricMatrix &m,
                                 const LabeledPairSet &p, double beta);

}  // namespace aml

#endif  // AML_LOSS_H_
