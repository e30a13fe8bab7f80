// aml/solver.h

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

#ifndef AML_SOLVER_H_
#define AML_SOLVER_H_

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "aml/loss.h"

namespace aml {

struct SolverConfig {
  double alpha = 1.0;   // weight of the worst-case-pair term; 0 = baseline
  double beta = 0.8;    // proximity weight of the confusion objective
  double rho = 1e-3;    // fixed step size
  int max_iters = 5000;
  double grad_tol = -1.0;    // <= 0 selects the default 1e-6 * pair count
  double eig_floor = kDefaultEigFloor;
  double gap_tol_rel = kDefaultGapTolRel;  // relative to max |eigenvalue|
  bool backtracking = false;  // halve the step locally on objective increase
  int max_halvings = 30;
  std::uint64_t seed = 1;

  void Validate() const;
  double EffectiveGradTol(Index pair_count) const;
};

struct TrainReport {
  std::vector<double> objective;  // one entry per iterate, length iters + 1
  int iterations = 0;
  double final_grad_norm = 0.0;
  double wall_seconds = 0.0;
  int projection_activations = 0;   // iterations where clamping changed M
  int degenerate_fallbacks = 0;     // adversarial term computed by differences
  long adversarial_term_evals = 0;  // 0 whenever alpha == 0
  double min_eigenvalue_seen = 0.0;
};

/// D(M): geometric-mean loss on X plus alpha times the spectral worst-case
/// loss.
double objective(const MetricMatrix &m, const LabeledPairSet &x,
                 const SolverConfig &cfg);

/// Gradient of the per-pair spectral term H_i = xhat^T U h_i(Lambda) U^T xhat,
/// assembled from divided differences of the spectral weight (the limit
/// h_i'(lambda) is used for gaps below gap_tol). Output is (G + G^T)/2; when
/// `asymmetry` is non-null it receives ||G - G^T||_F / ||G||_F of the raw G.
SymMatrix grad_H(const EigenDecomposition &e, const Vector &xhat, int label,
                 double beta, double gap_tol, double *asymmetry = nullptr);

/// Gradient of the full objective: A - M^{-1} B M^{-1} + alpha * sum_i
/// grad_H_i, symmetrized. `asymmetry` as in grad_H.
SymMatrix gradient(const MetricMatrix &m, const LabeledPairSet &x,
                   const SolverConfig &cfg, double *asymmetry = nullptr);

/// Central finite differences of f over symmetric perturbations
/// E_ij = (e_i e_j^T + e_j e_i^T) / 2.
SymMatrix finite_diff_gradient(const std::function<double(const SymMatrix &)> &f,
                               const SymMatrix &m, double step);

/// Projected gradient descent from M = I:
///   M <- P_S(M - rho grad D(M)),
/// stopping at the gradient tolerance or the iteration cap.
std::pair<MetricMatrix, TrainReport> train(const LabeledPairSet &x,
                                           const SolverConfig &cfg);

}  // namespace aml

#endif  // AML_SOLVER_H_
