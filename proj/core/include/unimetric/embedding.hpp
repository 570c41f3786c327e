#pragma once

#include <Eigen/Core>

#include "unimetric/errors.hpp"

namespace unimetric {

// Raw n x m set of representations, one row per instance. All entries finite.
class EmbeddingSet {
 public:
  explicit EmbeddingSet(Eigen::MatrixXd data);

  Eigen::Index n() const noexcept { return data_.rows(); }
  Eigen::Index m() const noexcept { return data_.cols(); }
  const Eigen::MatrixXd& data() const noexcept { return data_; }

 private:
  Eigen::MatrixXd data_;
};

// Same shape with every row on the unit sphere (norm within 1e-9 of 1).
class UnitEmbeddingSet {
 public:
  // Validating constructor for externally produced data.
  explicit UnitEmbeddingSet(Eigen::MatrixXd data);

  Eigen::Index n() const noexcept { return data_.rows(); }
  Eigen::Index m() const noexcept { return data_.cols(); }
  const Eigen::MatrixXd& data() const noexcept { return data_; }

 private:
  struct Trusted {};
  UnitEmbeddingSet(Eigen::MatrixXd data, Trusted) : data_(std::move(data)) {}
  friend UnitEmbeddingSet normalize_rows(const EmbeddingSet& embeddings);
  Eigen::MatrixXd data_;
};

// Row-wise L2 normalization. Throws ZeroNormRow for the first row whose norm
// is at or below 1e-12.
UnitEmbeddingSet normalize_rows(const EmbeddingSet& embeddings);

}  // namespace unimetric
