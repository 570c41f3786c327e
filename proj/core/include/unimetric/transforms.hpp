#pragma once

#include <vector>

#include "unimetric/embedding.hpp"

namespace unimetric {

// Row i of the output is row perm[i] of the input. perm must be a bijection
// on 0..n-1 (InvalidPermutation otherwise).
EmbeddingSet permute(const EmbeddingSet& E,
                     const std::vector<Eigen::Index>& perm);

// Row i multiplied by lambdas[i]; every factor strictly positive
// (NonPositiveScale otherwise).
EmbeddingSet scale_rows(const EmbeddingSet& E, const Eigen::VectorXd& lambdas);

// times copies of the row block stacked in order: rows 0..n-1, 0..n-1, ...
EmbeddingSet instance_clone(const EmbeddingSet& E, Eigen::Index times);

// Each row concatenated with itself times times: n x (times*m).
EmbeddingSet feature_clone(const EmbeddingSet& E, Eigen::Index times);

// k exactly-zero trailing coordinates appended to every row: n x (m+k).
EmbeddingSet zero_pad(const EmbeddingSet& E, Eigen::Index k);

}  // namespace unimetric
