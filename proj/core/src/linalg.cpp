#include "unimetric/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace unimetric {

namespace {

constexpr Eigen::Index kMomentChunk = 2048;

// Pairwise (tree) combination of per-chunk partials over [first, first+count)
// chunks. Fixed midpoint splits keep the combination order independent of
// how callers iterate, which pins row-permutation sensitivity at O(eps).
template <class Leaf>
auto pairwise_chunks(Eigen::Index first, Eigen::Index count, const Leaf& leaf)
    -> decltype(leaf(Eigen::Index{0})) {
  if (count == 1) return leaf(first);
  const Eigen::Index half = count / 2;
  auto acc = pairwise_chunks(first, half, leaf);
  acc += pairwise_chunks(first + half, count - half, leaf);
  return acc;
}

Eigen::Index chunk_count(Eigen::Index n) {
  return (n + kMomentChunk - 1) / kMomentChunk;
}

}  // namespace

GaussianSummary row_moments(const Eigen::MatrixXd& X) {
  const Eigen::Index n = X.rows();
  const Eigen::Index m = X.cols();
  const Eigen::Index chunks = chunk_count(n);

  const Eigen::VectorXd total = pairwise_chunks(
      Eigen::Index{0}, chunks, [&](Eigen::Index c) -> Eigen::VectorXd {
        const Eigen::Index lo = c * kMomentChunk;
        const Eigen::Index len = std::min(kMomentChunk, n - lo);
        return X.middleRows(lo, len).colwise().sum().transpose();
      });
  GaussianSummary out;
  out.mean = total / static_cast<double>(n);

  // Second pass: centered cross products per chunk, rank-update form so the
  // Gram of each chunk is computed once.
  Eigen::MatrixXd acc = pairwise_chunks(
      Eigen::Index{0}, chunks, [&](Eigen::Index c) -> Eigen::MatrixXd {
        const Eigen::Index lo = c * kMomentChunk;
        const Eigen::Index len = std::min(kMomentChunk, n - lo);
        Eigen::MatrixXd centered =
            X.middleRows(lo, len).rowwise() - out.mean.transpose();
        Eigen::MatrixXd partial = Eigen::MatrixXd::Zero(m, m);
        partial.selfadjointView<Eigen::Lower>().rankUpdate(
            centered.transpose());
        return partial;
      });
  acc /= static_cast<double>(n);
  out.cov = acc.selfadjointView<Eigen::Lower>();
  return out;
}

GaussianSummary gaussian_summary(const UnitEmbeddingSet& U) {
  return row_moments(U.data());
}

SymmetricEigen sym_eigen(const Eigen::MatrixXd& S) {
  if (S.rows() != S.cols()) throw NotSymmetric("matrix is not square");
  if (S.rows() == 0) throw NotSymmetric("matrix is empty");
  const double asym = (S - S.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-8) {
    throw NotSymmetric("asymmetry " + std::to_string(asym) +
                       " exceeds tolerance 1e-8");
  }
  // Exact halving: entries already equal across the diagonal stay bitwise
  // identical, and exact zeros stay exact zeros.
  const Eigen::MatrixXd sym = 0.5 * (S + S.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NoConvergence("symmetric eigensolver did not converge");
  }
  SymmetricEigen out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

Eigen::MatrixXd sqrtm_psd(const Eigen::MatrixXd& S) {
  const SymmetricEigen eig = sym_eigen(S);
  const Eigen::Index m = eig.values.size();
  const double scale =
      std::max(std::abs(eig.values[0]), std::abs(eig.values[m - 1]));
  if (eig.values[m - 1] < -1e-8 * scale) {
    throw NotPSD("eigenvalue " + std::to_string(eig.values[m - 1]) +
                 " is negative beyond round-off");
  }
  const Eigen::VectorXd roots =
      eig.values.cwiseMax(0.0).cwiseSqrt();
  Eigen::MatrixXd r =
      eig.vectors * roots.asDiagonal() * eig.vectors.transpose();
  return 0.5 * (r + r.transpose());
}

Eigen::VectorXd covariance_spectrum(const EmbeddingSet& embeddings) {
  if (embeddings.n() < 2) {
    throw TooFewInstances("covariance spectrum needs at least 2 rows");
  }
  const GaussianSummary moments = row_moments(embeddings.data());
  return sym_eigen(moments.cov).values.cwiseMax(0.0);
}

}  // namespace unimetric
