#pragma once

#include "unimetric/embedding.hpp"
#include "unimetric/linalg.hpp"

namespace unimetric {

struct MetricConfig {
  double t = 2.0;     // kernel temperature of the pairwise potential
  double beta = 2.0;  // alignment exponent
};

struct UniformityReport {
  double lu = 0.0;  // log mean pairwise Gaussian potential, in [-4t, 0]
  double w2 = 0.0;  // Wasserstein distance to the isotropic target, >= 0
  Eigen::Index n = 0;
  Eigen::Index m = 0;
};

// log( (2/(n(n-1))) * sum_{i<j} exp(-t * |u_i - u_j|^2) ) over normalized
// rows u. Computed from fixed-size row blocks via the Gram matrix
// (|u_i - u_j|^2 = u_i.u_i + u_j.u_j - 2 u_i.u_j, all three dots from the
// same product kernel, so identical rows sit at distance exactly zero and a
// fully collapsed set returns exactly 0). Block partials combine pairwise in
// block order, so the value is independent of any internal parallelism and
// the full n x n kernel is never materialized. Columns that are zero in
// every row are skipped; they cannot contribute to any dot product.
double uniformity_lu(const UnitEmbeddingSet& U, const MetricConfig& cfg = {});
double uniformity_lu(const EmbeddingSet& E, const MetricConfig& cfg = {});

// Quadratic Wasserstein distance between N(mean, cov) and the isotropic
// N(0, I/m): sqrt( |mean|^2 + sum_i (sqrt(lambda_i) - 1/sqrt(m))^2 ) over the
// eigenvalues of cov. This equals the trace form
// sqrt(|mean|^2 + 1 + tr cov - (2/sqrt(m)) tr cov^{1/2}) when tr cov +
// |mean|^2 = 1, but its radicand cannot go negative under round-off.
// Eigenvalues below 1e-13 * lambda_max (solver accuracy) count as exact
// zeros; negatives clamp to zero.
double w2_to_isotropic(const GaussianSummary& summary, Eigen::Index m);

// w2_to_isotropic of gaussian_summary(normalize_rows(E)).
double uniformity_w2(const UnitEmbeddingSet& U);
double uniformity_w2(const EmbeddingSet& E);

// (1/n) sum_i |u_i^a - u_i^b|^beta over index-paired normalized rows.
double alignment(const EmbeddingSet& Ea, const EmbeddingSet& Eb,
                 const MetricConfig& cfg = {});

// Quadratic Wasserstein distance between two Gaussians:
// sqrt( |mu1-mu2|^2 + tr(S1 + S2 - 2 sqrtm(sqrtm(S2) S1 sqrtm(S2))) ).
// Radicand within -1e-9 of zero clamps to zero.
double gauss_w2(const GaussianSummary& g1, const GaussianSummary& g2);

// KL(N1 || N2) via eigendecompositions and log-determinant sums (no explicit
// determinants). Any eigenvalue below 1e-12 * lambda_max of either covariance
// throws SingularCovariance.
double gauss_kl(const GaussianSummary& g1, const GaussianSummary& g2);

// Bhattacharyya distance, same rank requirements as gauss_kl.
double gauss_bhattacharyya(const GaussianSummary& g1,
                           const GaussianSummary& g2);

// Both uniformity values in one pass over shared normalized rows.
UniformityReport uniformity_report(const EmbeddingSet& E,
                                   const MetricConfig& cfg = {});

}  // namespace unimetric
