#pragma once

#include <Eigen/Dense>

#include "unimetric/embedding.hpp"

namespace unimetric {

// First and second population moments (divisor n, no Bessel correction).
struct GaussianSummary {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
};

// Population moments of the rows of X. Accumulation is chunked with pairwise
// combination, so row permutations change the result by at most O(eps), and
// exactly-zero columns produce exactly-zero mean/covariance entries. cov is
// symmetric by construction.
GaussianSummary row_moments(const Eigen::MatrixXd& X);

// Moments of a set of unit rows; tr(cov) + |mean|^2 = 1 up to round-off.
GaussianSummary gaussian_summary(const UnitEmbeddingSet& U);

struct SymmetricEigen {
  Eigen::VectorXd values;   // descending
  Eigen::MatrixXd vectors;  // orthonormal columns; col(i) pairs values[i]
};

// Eigendecomposition of a symmetric matrix. The input is symmetrized
// exactly ((S+S^T)/2) before factorization; asymmetry above 1e-8 throws
// NotSymmetric, solver failure throws NoConvergence.
SymmetricEigen sym_eigen(const Eigen::MatrixXd& S);

// Symmetric PSD square root V diag(sqrt(max(lambda,0))) V^T. Eigenvalues in
// [-1e-8*|S|_2, 0) clamp to zero; anything below that throws NotPSD.
Eigen::MatrixXd sqrtm_psd(const Eigen::MatrixXd& S);

// Eigenvalues of the population covariance of the raw rows, descending,
// clamped at zero. Needs n >= 2 (TooFewInstances otherwise).
Eigen::VectorXd covariance_spectrum(const EmbeddingSet& embeddings);

}  // namespace unimetric
