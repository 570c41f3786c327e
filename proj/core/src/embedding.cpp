#include "unimetric/embedding.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace unimetric {

namespace {

void require_nonempty_finite(const Eigen::MatrixXd& data) {
  if (data.rows() < 1 || data.cols() < 1) {
    throw std::invalid_argument("embedding set needs at least one row and one column");
  }
  if (!data.allFinite()) {
    throw std::invalid_argument("embedding set entries must be finite");
  }
}

}  // namespace

EmbeddingSet::EmbeddingSet(Eigen::MatrixXd data) : data_(std::move(data)) {
  require_nonempty_finite(data_);
}

UnitEmbeddingSet::UnitEmbeddingSet(Eigen::MatrixXd data)
    : data_(std::move(data)) {
  require_nonempty_finite(data_);
  const Eigen::VectorXd norms = data_.rowwise().norm();
  for (Eigen::Index i = 0; i < norms.size(); ++i) {
    if (std::abs(norms[i] - 1.0) > 1e-9) {
      throw std::invalid_argument("row " + std::to_string(i) +
                                  " does not have unit norm");
    }
  }
}

UnitEmbeddingSet normalize_rows(const EmbeddingSet& embeddings) {
  Eigen::MatrixXd data = embeddings.data();
  const Eigen::VectorXd norms = data.rowwise().norm();
  for (Eigen::Index i = 0; i < norms.size(); ++i) {
    if (norms[i] <= 1e-12) throw ZeroNormRow(static_cast<std::size_t>(i));
  }
  data.array().colwise() /= norms.array();
  return UnitEmbeddingSet(std::move(data), UnitEmbeddingSet::Trusted{});
}

}  // namespace unimetric
