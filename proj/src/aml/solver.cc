// aml/solver.cc

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

#include "aml/solver.h"

#include <chrono>
#include <cmath>
#include <string>

namespace aml {

namespace {

constexpr double kDegenerateGapRel = 1e-6;

// Divided-difference (Loewner) matrix of the spectral weight: h'(lambda_j)
// on the diagonal and (h(l_j) - h(l_k)) / (l_j - l_k) off it, with the
// derivative limit once a gap falls below gap_tol.
Matrix loewner_matrix(const Vector &lambda, int label, double beta,
                      double gap_tol) {
  const Index d = lambda.size();
  Vector h(d);
  for (Index j = 0; j < d; ++j) h(j) = spectral_weight(lambda(j), label, beta);
  Matrix k(d, d);
  for (Index j = 0; j < d; ++j) {
    for (Index l = 0; l <= j; ++l) {
      double gap = lambda(j) - lambda(l);
      double v = std::abs(gap) > gap_tol
                     ? (h(j) - h(l)) / gap
                     : spectral_weight_derivative(0.5 * (lambda(j) + lambda(l)),
                                                  label, beta);
      k(j, l) = v;
      k(l, j) = v;
    }
  }
  return k;
}

double absolute_gap_tol(const Vector &lambda, double gap_tol_rel) {
  return gap_tol_rel * lambda.cwiseAbs().maxCoeff();
}

// sum_i grad H_i over all pairs, collapsed through the scatter matrices:
//   U [ K_+ o (U^T A U) + K_- o (U^T B U) ] U^T.
Matrix adversarial_gradient_raw(const EigenDecomposition &e,
                                const ScatterStats &s, double beta,
                                double gap_tol) {
  Matrix at = e.eigenvectors.transpose() * s.similar.mat() * e.eigenvectors;
  Matrix bt = e.eigenvectors.transpose() * s.dissimilar.mat() * e.eigenvectors;
  Matrix w = loewner_matrix(e.eigenvalues, 1, beta, gap_tol).cwiseProduct(at) +
             loewner_matrix(e.eigenvalues, -1, beta, gap_tol).cwiseProduct(bt);
  return e.eigenvectors * w * e.eigenvectors.transpose();
}

double adversarial_loss_fast(const EigenDecomposition &e,
                             const ScatterStats &s, double beta) {
  Matrix at = e.eigenvectors.transpose() * s.similar.mat() * e.eigenvectors;
  Matrix bt = e.eigenvectors.transpose() * s.dissimilar.mat() * e.eigenvectors;
  double total = 0.0;
  for (Index j = 0; j < e.dim(); ++j) {
    total += spectral_weight(e.eigenvalues(j), 1, beta) * at(j, j);
    total += spectral_weight(e.eigenvalues(j), -1, beta) * bt(j, j);
  }
  return total;
}

double base_loss_fast(const EigenDecomposition &e, const ScatterStats &s) {
  Matrix at = e.eigenvectors.transpose() * s.similar.mat() * e.eigenvectors;
  Matrix bt = e.eigenvectors.transpose() * s.dissimilar.mat() * e.eigenvectors;
  double total = 0.0;
  for (Index j = 0; j < e.dim(); ++j)
    total += e.eigenvalues(j) * at(j, j) + bt(j, j) / e.eigenvalues(j);
  return total;
}

Matrix base_gradient(const MetricMatrix &m, const ScatterStats &s) {
  return s.similar.mat() -
         m.inverse() * s.dissimilar.mat() * m.inverse();
}

double relative_asymmetry(const Matrix &g) {
  double n = g.norm();
  if (n == 0.0) return 0.0;
  return (g - g.transpose()).norm() / n;
}

}  // namespace

void SolverConfig::Validate() const {
  if (alpha < 0) throw ConfigError("solver: alpha must be >= 0");
  if (beta <= 0) throw ConfigError("solver: beta must be > 0");
  if (rho <= 0) throw ConfigError("solver: rho must be > 0");
  if (max_iters < 0) throw ConfigError("solver: max_iters must be >= 0");
  if (eig_floor <= 0) throw ConfigError("solver: eig_floor must be > 0");
  if (gap_tol_rel < 0) throw ConfigError("solver: gap_tol must be >= 0");
  if (max_halvings < 0) throw ConfigError("solver: max_halvings must be >= 0");
}

double SolverConfig::EffectiveGradTol(Index pair_count) const {
  return grad_tol > 0 ? grad_tol : 1e-6 * static_cast<double>(pair_count);
}

double objective(const MetricMatrix &m, const LabeledPairSet &x,
                 const SolverConfig &cfg) {
  double value = geometric_mean_loss(m, x);
  if (cfg.alpha > 0)
    value += cfg.alpha * adversarial_spectral_loss(m, x, cfg.beta);
  return value;
}

SymMatrix grad_H(const EigenDecomposition &e, const Vector &xhat, int label,
                 double beta, double gap_tol, double *asymmetry) {
  if (xhat.size() != e.dim())
    throw InvalidInputError("grad_H: dimension mismatch");
  Vector c = e.eigenvectors.transpose() * xhat;
  Matrix w = loewner_matrix(e.eigenvalues, label, beta, gap_tol)
                 .cwiseProduct(c * c.transpose());
  Matrix g = e.eigenvectors * w * e.eigenvectors.transpose();
  if (asymmetry) *asymmetry = relative_asymmetry(g);
  return SymMatrix(g);
}

SymMatrix gradient(const MetricMatrix &m, const LabeledPairSet &x,
                   const SolverConfig &cfg, double *asymmetry) {
  cfg.Validate();
  ScatterStats s = scatter_stats(x);
  Matrix g = base_gradient(m, s);
  if (cfg.alpha > 0) {
    double gap_tol = absolute_gap_tol(m.eigen().eigenvalues, cfg.gap_tol_rel);
    g += cfg.alpha * adversarial_gradient_raw(m.eigen(), s, cfg.beta, gap_tol);
  }
  if (asymmetry) *asymmetry = relative_asymmetry(g);
  return SymMatrix(g);
}

SymMatrix finite_diff_gradient(
    const std::function<double(const SymMatrix &)> &f, const SymMatrix &m,
    double step) {
  if (step <= 0)
    throw InvalidInputError("finite_diff_gradient: step must be positive");
  const Index d = m.dim();
  Matrix g(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = i; j < d; ++j) {
      Matrix e = Matrix::Zero(d, d);
      if (i == j) {
        e(i, i) = 1.0;
      } else {
        e(i, j) = 0.5;
        e(j, i) = 0.5;
      }
      double fp = f(SymMatrix(m.mat() + step * e));
      double fm = f(SymMatrix(m.mat() - step * e));
      if (!std::isfinite(fp) || !std::isfinite(fm))
        throw NumericalError("finite_diff_gradient: non-finite value");
      g(i, j) = (fp - fm) / (2.0 * step);
      g(j, i) = g(i, j);
    }
  }
  return SymMatrix(g);
}

std::pair<MetricMatrix, TrainReport> train(const LabeledPairSet &x,
                                           const SolverConfig &cfg) {
  cfg.Validate();
  if (x.similar_count() == 0 || x.dissimilar_count() == 0)
    throw InvalidInputError(
        "train: both similar and dissimilar pairs are required");
  ScatterStats s = scatter_stats(x);
  if (s.similar.mat().norm() == 0.0 || s.dissimilar.mat().norm() == 0.0)
    throw InvalidInputError("train: scatter matrices must be nonzero");

  const auto t_start = std::chrono::steady_clock::now();
  const double grad_tol = cfg.EffectiveGradTol(x.count());

  TrainReport report;
  report.min_eigenvalue_seen = 1.0;

  MetricMatrix m = MetricMatrix::Identity(x.dim(), cfg.eig_floor);
  double grad_norm = 0.0;

  auto objective_of = [&](const EigenDecomposition &e) {
    double value = base_loss_fast(e, s);
    if (cfg.alpha > 0) {
      value += cfg.alpha * adversarial_loss_fast(e, s, cfg.beta);
      ++report.adversarial_term_evals;
    }
    return value;
  };

  double current = objective_of(m.eigen());
  int t = 0;
  for (;; ++t) {
    report.objective.push_back(current);
    if (!std::isfinite(current))
      throw NumericalError("train: objective diverged at iteration " +
                           std::to_string(t) + "; reduce rho");
    report.min_eigenvalue_seen =
        std::min(report.min_eigenvalue_seen, m.eigen().eigenvalues.minCoeff());
    if (t == cfg.max_iters) break;

    const Vector &lambda = m.eigen().eigenvalues;
    const double max_abs = lambda.cwiseAbs().maxCoeff();
    Matrix g = base_gradient(m, s);
    if (cfg.alpha > 0) {
      Vector gaps = lambda.tail(lambda.size() - 1) - lambda.head(lambda.size() - 1);
      if (lambda.size() > 1 && gaps.minCoeff() < kDegenerateGapRel * max_abs) {
        // Degenerate spectrum: the divided-difference assembly is
        // ill-conditioned, use central differences for this term.
        ++report.degenerate_fallbacks;
        SymMatrix fd = finite_diff_gradient(
            [&](const SymMatrix &mm) {
              ++report.adversarial_term_evals;
              return adversarial_loss_fast(sym_eigen(mm), s, cfg.beta);
            },
            m.base(), 1e-5);
        g += cfg.alpha * fd.mat();
      } else {
        g += cfg.alpha * adversarial_gradient_raw(
                             m.eigen(), s, cfg.beta,
                             absolute_gap_tol(lambda, cfg.gap_tol_rel));
        ++report.adversarial_term_evals;
      }
    }
    g = 0.5 * (g + g.transpose());
    grad_norm = g.norm();
    if (grad_norm <= grad_tol) break;

    double rho = cfg.rho;
    for (int h = 0;; ++h) {
      EigenDecomposition stepped = sym_eigen(SymMatrix(m.mat() - rho * g));
      bool clamped = stepped.eigenvalues.minCoeff() < cfg.eig_floor;
      EigenDecomposition projected = stepped;
      projected.eigenvalues = stepped.eigenvalues.cwiseMax(cfg.eig_floor);
      MetricMatrix candidate = MetricMatrix::FromEigen(projected, cfg.eig_floor);
      double next = objective_of(candidate.eigen());
      if (cfg.backtracking && next > current && h < cfg.max_halvings) {
        rho *= 0.5;
        continue;
      }
      if (clamped) ++report.projection_activations;
      m = std::move(candidate);
      current = next;
      break;
    }
  }

  report.iterations = t;
  if (t == cfg.max_iters && cfg.max_iters > 0) {
    // Report the gradient norm at the final iterate as well.
    SymMatrix g_final = gradient(m, x, cfg);
    grad_norm = g_final.mat().norm();
    if (cfg.alpha > 0) ++report.adversarial_term_evals;
  }
  report.final_grad_norm = grad_norm;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return {std::move(m), std::move(report)};
}

}  // namespace aml
