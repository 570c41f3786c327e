#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "unimetric/embedding.hpp"

namespace unimetric {

enum class Dist {
  StandardGaussian,  // i.i.d. N(0,1) per coordinate
  UniformBox,        // i.i.d. uniform on (0,1) per coordinate
  GaussianMixture,   // unit-covariance components spaced along (1,..,1)/sqrt(m)
  UniformSphere,     // normalize(StandardGaussian), uniform on the unit sphere
};

std::string dist_name(Dist dist);

// Recipe for one synthetic draw. Collapse masks the trailing ceil(eta*m)
// coordinates; at least one coordinate must stay live. The shift is added to
// every live coordinate after masking.
struct CollapseSpec {
  Eigen::Index n = 0;
  Eigen::Index m = 0;
  double eta = 0.0;    // in [0,1)
  double shift = 0.0;  // >= 0
  Dist dist = Dist::StandardGaussian;
  int mixture_components = 2;
  double mixture_separation = 4.0;  // distance between adjacent centers
  std::uint64_t seed = 0;
};

// Number of masked trailing coordinates, ceil(eta*m).
Eigen::Index masked_dims(const CollapseSpec& spec);

// Deterministic draw: one GaussianStream seeded with spec.seed, rows filled
// in row order, coordinates in column order (mixtures draw one uniform for
// the component before the row's normals). Masking zeroes trailing columns
// after the full draw, so for a fixed seed the live columns do not depend
// on eta.
EmbeddingSet sample(const CollapseSpec& spec);

// Density of one coordinate of a uniform point on the unit sphere in R^m:
// Gamma(m/2) / (sqrt(pi) Gamma((m-1)/2)) * (1-y^2)^((m-3)/2) for |y| < 1,
// else 0. Evaluated through log-gamma, stable for large m.
double pdf_coordinate_sphere(double y, int m);

// N(0, variance) density.
double pdf_gauss1d(double y, double variance);

// Equal-width binned masses over [lo, hi]. Bins are right-open, the last bin
// is closed; out-of-range samples are tallied in `overflow` and excluded
// from the mass, which is normalized by the in-range count.
struct Histogram1D {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> mass;  // sums to 1 within 1e-9
  long long overflow = 0;

  Eigen::Index bins() const noexcept {
    return static_cast<Eigen::Index>(mass.size());
  }
  double bin_width() const noexcept {
    return (hi - lo) / static_cast<double>(mass.size());
  }
};

// Throws EmptyInRange when no sample lands inside [lo, hi].
Histogram1D bin_density(std::span<const double> samples, int bins, double lo,
                        double hi);

// 1-D Wasserstein-1 between the two binned measures placed at bin centers:
// bin_width * sum_b |CDF1(b) - CDF2(b)|. Grids must match (GridMismatch).
double hist_w1(const Histogram1D& h1, const Histogram1D& h2);

// KL(h1 || h2) after additive smoothing eps=1e-10 on both and
// renormalization; finite even for disjoint supports.
double hist_kl(const Histogram1D& h1, const Histogram1D& h2);

}  // namespace unimetric
