// aml/linalg.h

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

#ifndef AML_LINALG_H_
#define AML_LINALG_H_

#include <Eigen/Dense>

#include "aml/error.h"

namespace aml {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Smallest eigenvalue kept by the PSD projection so that the projected
// matrix stays invertible.
inline constexpr double kDefaultEigFloor = 1e-8;

// Eigen gaps below kDefaultGapTolRel * max|lambda| are treated as zero in
// the shifted pseudo-inverse and in divided differences.
inline constexpr double kDefaultGapTolRel = 1e-9;

/// Dense symmetric matrix. Construction symmetrizes the input as
/// (G + G^T)/2 and rejects non-finite entries.
class SymMatrix {
 public:
  explicit SymMatrix(Matrix m);
  static SymMatrix Identity(Index dim);
  static SymMatrix Zero(Index dim);

  Index dim() const { return m_.rows(); }
  const Matrix &mat() const { return m_; }
  double operator()(Index i, Index j) const { return m_(i, j); }

 private:
  Matrix m_;
};

/// Eigenvalues ascending; eigenvector columns orthonormal, sign-fixed so the
/// first component of each column with magnitude above 1e-12 is positive.
struct EigenDecomposition {
  Vector eigenvalues;
  Matrix eigenvectors;

  Index dim() const { return eigenvalues.size(); }
  Matrix Reconstruct() const;
};

EigenDecomposition sym_eigen(const SymMatrix &s);

/// U diag(1/lambda) U^T. Throws NotPositiveDefiniteError if any eigenvalue
/// is below `floor`.
SymMatrix spd_inverse(const EigenDecomposition &e,
                      double floor = kDefaultEigFloor);

/// Moore-Penrose pseudo-inverse of (lambda_j I - M) from M's decomposition:
/// U diag(g) U^T with g_k = 1/(lambda_j - lambda_k) when the gap exceeds
/// `gap_tol`, else 0.
SymMatrix shifted_pseudoinverse(const EigenDecomposition &e, Index j,
                                double gap_tol);

/// Nearest-PSD projection: eigenvalues clamped to max(lambda, floor).
SymMatrix project_psd(const SymMatrix &s, double floor);

}  // namespace aml

#endif  // AML_LINALG_H_
