#include "unimetric/transforms.hpp"

#include <stdexcept>
#include <vector>

namespace unimetric {

EmbeddingSet permute(const EmbeddingSet& E,
                     const std::vector<Eigen::Index>& perm) {
  const Eigen::Index n = E.n();
  if (static_cast<Eigen::Index>(perm.size()) != n) {
    throw InvalidPermutation("permutation length does not match row count");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const Eigen::Index p : perm) {
    if (p < 0 || p >= n) {
      throw InvalidPermutation("index out of range in permutation");
    }
    if (seen[static_cast<std::size_t>(p)]) {
      throw InvalidPermutation("repeated index in permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  Eigen::MatrixXd out(n, E.m());
  for (Eigen::Index i = 0; i < n; ++i) {
    out.row(i) = E.data().row(perm[static_cast<std::size_t>(i)]);
  }
  return EmbeddingSet(std::move(out));
}

EmbeddingSet scale_rows(const EmbeddingSet& E, const Eigen::VectorXd& lambdas) {
  if (lambdas.size() != E.n()) {
    throw ShapeMismatch("one scale factor per row required");
  }
  for (Eigen::Index i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas[i] > 0.0)) {
      throw NonPositiveScale(static_cast<std::size_t>(i));
    }
  }
  Eigen::MatrixXd out = E.data();
  out.array().colwise() *= lambdas.array();
  return EmbeddingSet(std::move(out));
}

EmbeddingSet instance_clone(const EmbeddingSet& E, Eigen::Index times) {
  if (times < 1) throw std::invalid_argument("times must be >= 1");
  return EmbeddingSet(E.data().replicate(times, 1));
}

EmbeddingSet feature_clone(const EmbeddingSet& E, Eigen::Index times) {
  if (times < 1) throw std::invalid_argument("times must be >= 1");
  return EmbeddingSet(E.data().replicate(1, times));
}

EmbeddingSet zero_pad(const EmbeddingSet& E, Eigen::Index k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(E.n(), E.m() + k);
  out.leftCols(E.m()) = E.data();
  return EmbeddingSet(std::move(out));
}

}  // namespace unimetric
