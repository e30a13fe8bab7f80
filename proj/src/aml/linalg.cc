// aml/linalg.cc

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

#include "aml/linalg.h"

#include <string>

namespace aml {

SymMatrix::SymMatrix(Matrix m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw InvalidInputError("SymMatrix: expected a nonempty square matrix, got " +
                            std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  if (!m.allFinite())
    throw InvalidInputError("SymMatrix: non-finite entries");
  m_ = 0.5 * (m + m.transpose());
}

SymMatrix SymMatrix::Identity(Index dim) {
  return SymMatrix(Matrix::Identity(dim, dim));
}

SymMatrix SymMatrix::Zero(Index dim) {
  return SymMatrix(Matrix::Zero(dim, dim));
}

Matrix EigenDecomposition::Reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.transpose();
}

EigenDecomposition sym_eigen(const SymMatrix &s) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(s.mat());
  if (solver.info() != Eigen::Success)
    throw NumericalError("sym_eigen: eigensolver failed to converge (dim " +
                         std::to_string(s.dim()) + ")");
  EigenDecomposition e;
  e.eigenvalues = solver.eigenvalues();  // ascending
  e.eigenvectors = solver.eigenvectors();
  // Deterministic sign convention: first component of each column with
  // magnitude above 1e-12 must be positive.
  for (Index j = 0; j < e.dim(); ++j) {
    for (Index i = 0; i < e.dim(); ++i) {
      double v = e.eigenvectors(i, j);
      if (std::abs(v) > 1e-12) {
        if (v < 0) e.eigenvectors.col(j) = -e.eigenvectors.col(j);
        break;
      }
    }
  }
  return e;
}

SymMatrix spd_inverse(const EigenDecomposition &e, double floor) {
  if (floor <= 0)
    throw InvalidInputError("spd_inverse: floor must be positive");
  if (e.eigenvalues.minCoeff() < floor)
    throw NotPositiveDefiniteError(
        "spd_inverse: eigenvalue " + std::to_string(e.eigenvalues.minCoeff()) +
        " below floor " + std::to_string(floor));
  Vector inv = e.eigenvalues.cwiseInverse();
  return SymMatrix(e.eigenvectors * inv.asDiagonal() *
                   e.eigenvectors.transpose());
}

SymMatrix shifted_pseudoinverse(const EigenDecomposition &e, Index j,
                                double gap_tol) {
  if (j < 0 || j >= e.dim())
    throw InvalidInputError("shifted_pseudoinverse: index " +
                            std::to_string(j) + " out of range");
  const double lj = e.eigenvalues(j);
  Vector g(e.dim());
  for (Index k = 0; k < e.dim(); ++k) {
    double gap = lj - e.eigenvalues(k);
    g(k) = std::abs(gap) > gap_tol ? 1.0 / gap : 0.0;
  }
  return SymMatrix(e.eigenvectors * g.asDiagonal() * e.eigenvectors.transpose());
}

SymMatrix project_psd(const SymMatrix &s, double floor) {
  EigenDecomposition e = sym_eigen(s);
  Vector clamped = e.eigenvalues.cwiseMax(floor);
  return SymMatrix(e.eigenvectors * clamped.asDiagonal() *
                   e.eigenvectors.transpose());
}

}  // namespace aml
