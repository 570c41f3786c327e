#include "unimetric/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace unimetric {

namespace {

constexpr Eigen::Index kLuBlock = 2048;

void require_config(const MetricConfig& cfg) {
  if (!(cfg.t > 0.0)) throw std::invalid_argument("t must be positive");
  if (!(cfg.beta > 0.0)) throw std::invalid_argument("beta must be positive");
}

// Indices of columns that are nonzero in at least one row. Masked or padded
// coordinates are exact zeros and contribute nothing to any dot product, so
// the pair sum runs on the compacted matrix.
std::vector<Eigen::Index> live_columns(const Eigen::MatrixXd& X) {
  std::vector<Eigen::Index> live;
  live.reserve(static_cast<std::size_t>(X.cols()));
  for (Eigen::Index j = 0; j < X.cols(); ++j) {
    if ((X.col(j).array() != 0.0).any()) live.push_back(j);
  }
  return live;
}

double pairwise_sum(const std::vector<double>& parts, std::size_t first,
                    std::size_t count) {
  if (count == 1) return parts[first];
  const std::size_t half = count / 2;
  return pairwise_sum(parts, first, half) +
         pairwise_sum(parts, first + half, count - half);
}

// Sum of exp(-t * |u_i - u_j|^2) over i < j via per-block Gram matrices,
// with |u_i - u_j|^2 = q_i + q_j - 2 g_ij and the self-dots q taken from the
// diagonal Gram blocks. The matrix product computes every dot with the same
// reduction order, so bitwise-identical rows give q_i == q_j == g_ij and an
// exactly zero distance (and a collapsed set sums exactly e^0 per pair);
// row norms are never assumed to be exactly 1. Block boundaries and the
// reduction tree are fixed, so the result does not depend on evaluation
// order.
double potential_pair_sum(const Eigen::MatrixXd& rows, double t) {
  const Eigen::Index n = rows.rows();
  const Eigen::Index blocks = (n + kLuBlock - 1) / kLuBlock;
  Eigen::VectorXd q(n);
  std::vector<double> partials;
  partials.reserve(static_cast<std::size_t>(blocks * (blocks + 1) / 2));
  Eigen::MatrixXd gram;
  // diagonal blocks fill q and contribute their strict upper triangles
  for (Eigen::Index b = 0; b < blocks; ++b) {
    const Eigen::Index i0 = b * kLuBlock;
    const Eigen::Index len = std::min(kLuBlock, n - i0);
    const auto blk = rows.middleRows(i0, len);
    gram.noalias() = blk * blk.transpose();
    q.segment(i0, len) = gram.diagonal();
    double part = 0.0;
    for (Eigen::Index j = 1; j < len; ++j) {
      part += (-t * (q.segment(i0, j).array() + gram(j, j) -
                     2.0 * gram.col(j).head(j).array())
                        .max(0.0))
                  .exp()
                  .sum();
    }
    partials.push_back(part);
  }
  for (Eigen::Index bi = 0; bi < blocks; ++bi) {
    const Eigen::Index i0 = bi * kLuBlock;
    const Eigen::Index ilen = std::min(kLuBlock, n - i0);
    const auto rows_i = rows.middleRows(i0, ilen);
    for (Eigen::Index bj = bi + 1; bj < blocks; ++bj) {
      const Eigen::Index j0 = bj * kLuBlock;
      const Eigen::Index jlen = std::min(kLuBlock, n - j0);
      gram.noalias() = rows_i * rows.middleRows(j0, jlen).transpose();
      double part = 0.0;
      for (Eigen::Index j = 0; j < jlen; ++j) {
        part += (-t * (q.segment(i0, ilen).array() + q[j0 + j] -
                       2.0 * gram.col(j).array())
                          .max(0.0))
                    .exp()
                    .sum();
      }
      partials.push_back(part);
    }
  }
  return pairwise_sum(partials, 0, partials.size());
}

void require_same_dim(const GaussianSummary& g1, const GaussianSummary& g2) {
  if (g1.mean.size() != g2.mean.size() || g1.cov.rows() != g2.cov.rows() ||
      g1.cov.cols() != g2.cov.cols()) {
    throw ShapeMismatch("Gaussian summaries have different dimensions");
  }
  if (g1.cov.rows() != g1.mean.size()) {
    throw ShapeMismatch("covariance extent does not match the mean");
  }
}

// Eigenvalues checked against the rank floor used by the divergence
// formulas: anything below 1e-12 * lambda_max is rank deficiency.
void require_full_rank(const Eigen::VectorXd& values, const char* which) {
  const double lmax = values[0];
  if (!(lmax > 0.0) || values[values.size() - 1] < 1e-12 * lmax) {
    throw SingularCovariance(std::string(which) +
                             " covariance is singular at the 1e-12 cutoff");
  }
}

}  // namespace

double uniformity_lu(const UnitEmbeddingSet& U, const MetricConfig& cfg) {
  require_config(cfg);
  const Eigen::Index n = U.n();
  if (n < 2) throw TooFewInstances("uniformity_lu needs at least 2 rows");

  const Eigen::MatrixXd& X = U.data();
  const std::vector<Eigen::Index> live = live_columns(X);
  double total;
  if (static_cast<Eigen::Index>(live.size()) < X.cols()) {
    const Eigen::MatrixXd compact = X(Eigen::all, live);
    total = potential_pair_sum(compact, cfg.t);
  } else {
    total = potential_pair_sum(X, cfg.t);
  }
  // Dividing by the exact pair count keeps the collapsed case at log(1)=0.
  const double pair_count = 0.5 * static_cast<double>(n) *
                            static_cast<double>(n - 1);
  return std::log(total / pair_count);
}

double uniformity_lu(const EmbeddingSet& E, const MetricConfig& cfg) {
  return uniformity_lu(normalize_rows(E), cfg);
}

double w2_to_isotropic(const GaussianSummary& summary, Eigen::Index m) {
  if (summary.mean.size() != m || summary.cov.rows() != m) {
    throw ShapeMismatch("summary dimension does not match m");
  }
  const SymmetricEigen eig = sym_eigen(summary.cov);
  const double lmax = std::max(eig.values[0], 0.0);
  const double floor = 1e-13 * lmax;
  const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));
  double acc = summary.mean.squaredNorm();
  for (Eigen::Index i = 0; i < m; ++i) {
    const double lambda = eig.values[i] <= floor ? 0.0 : eig.values[i];
    const double gap = std::sqrt(lambda) - inv_sqrt_m;
    acc += gap * gap;
  }
  return std::sqrt(acc);
}

double uniformity_w2(const UnitEmbeddingSet& U) {
  return w2_to_isotropic(gaussian_summary(U), U.m());
}

double uniformity_w2(const EmbeddingSet& E) {
  return uniformity_w2(normalize_rows(E));
}

double alignment(const EmbeddingSet& Ea, const EmbeddingSet& Eb,
                 const MetricConfig& cfg) {
  require_config(cfg);
  if (Ea.n() != Eb.n() || Ea.m() != Eb.m()) {
    throw ShapeMismatch("paired sets must have identical n and m");
  }
  const UnitEmbeddingSet Ua = normalize_rows(Ea);
  const UnitEmbeddingSet Ub = normalize_rows(Eb);
  const Eigen::Index n = Ua.n();
  const Eigen::VectorXd sq =
      (Ua.data() - Ub.data()).rowwise().squaredNorm();
  double total = 0.0;
  if (cfg.beta == 2.0) {
    total = sq.sum();
  } else {
    total = sq.array().pow(0.5 * cfg.beta).sum();
  }
  return total / static_cast<double>(n);
}

double gauss_w2(const GaussianSummary& g1, const GaussianSummary& g2) {
  require_same_dim(g1, g2);
  const Eigen::MatrixXd root2 = sqrtm_psd(g2.cov);
  Eigen::MatrixXd inner = root2 * g1.cov * root2;
  inner = 0.5 * (inner + inner.transpose());
  const Eigen::MatrixXd cross = sqrtm_psd(inner);
  double radicand = (g1.mean - g2.mean).squaredNorm() + g1.cov.trace() +
                    g2.cov.trace() - 2.0 * cross.trace();
  if (radicand < 0.0) {
    if (radicand < -1e-9) {
      throw NotPSD("Wasserstein radicand negative beyond round-off");
    }
    radicand = 0.0;
  }
  return std::sqrt(radicand);
}

double gauss_kl(const GaussianSummary& g1, const GaussianSummary& g2) {
  require_same_dim(g1, g2);
  const Eigen::Index m = g1.mean.size();
  const SymmetricEigen e1 = sym_eigen(g1.cov);
  const SymmetricEigen e2 = sym_eigen(g2.cov);
  require_full_rank(e1.values, "first");
  require_full_rank(e2.values, "second");

  const Eigen::VectorXd diff = e2.vectors.transpose() * (g1.mean - g2.mean);
  const double quad = (diff.array().square() / e2.values.array()).sum();

  const Eigen::MatrixXd rotated =
      e2.vectors.transpose() * g1.cov * e2.vectors;
  const double trace_term =
      (rotated.diagonal().array() / e2.values.array()).sum() -
      static_cast<double>(m);

  const double logdet =
      e2.values.array().log().sum() - e1.values.array().log().sum();

  const double kl = 0.5 * (quad + trace_term + logdet);
  return (kl < 0.0 && kl >= -1e-9) ? 0.0 : kl;
}

double gauss_bhattacharyya(const GaussianSummary& g1,
                           const GaussianSummary& g2) {
  require_same_dim(g1, g2);
  const Eigen::MatrixXd blend = 0.5 * (g1.cov + g2.cov);
  const SymmetricEigen eb = sym_eigen(blend);
  const SymmetricEigen e1 = sym_eigen(g1.cov);
  const SymmetricEigen e2 = sym_eigen(g2.cov);
  require_full_rank(e1.values, "first");
  require_full_rank(e2.values, "second");
  require_full_rank(eb.values, "blended");

  const Eigen::VectorXd diff = eb.vectors.transpose() * (g1.mean - g2.mean);
  const double quad =
      0.125 * (diff.array().square() / eb.values.array()).sum();
  const double logterm =
      0.5 * (eb.values.array().log().sum() -
             0.5 * (e1.values.array().log().sum() +
                    e2.values.array().log().sum()));
  const double value = quad + logterm;
  return (value < 0.0 && value >= -1e-9) ? 0.0 : value;
}

UniformityReport uniformity_report(const EmbeddingSet& E,
                                   const MetricConfig& cfg) {
  const UnitEmbeddingSet U = normalize_rows(E);
  UniformityReport report;
  report.lu = uniformity_lu(U, cfg);
  report.w2 = uniformity_w2(U);
  report.n = E.n();
  report.m = E.m();
  return report;
}

}  // namespace unimetric
