#include "unimetric/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "unimetric/rng.hpp"

namespace unimetric {

std::string dist_name(Dist dist) {
  switch (dist) {
    case Dist::StandardGaussian: return "gaussian";
    case Dist::UniformBox: return "uniform-box";
    case Dist::GaussianMixture: return "mixture";
    case Dist::UniformSphere: return "sphere";
  }
  throw std::invalid_argument("unknown distribution");
}

Eigen::Index masked_dims(const CollapseSpec& spec) {
  return static_cast<Eigen::Index>(
      std::ceil(spec.eta * static_cast<double>(spec.m)));
}

namespace {

void require_spec(const CollapseSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("n must be >= 1");
  if (spec.m < 1) throw std::invalid_argument("m must be >= 1");
  if (!(spec.eta >= 0.0 && spec.eta < 1.0)) {
    throw std::invalid_argument("eta must lie in [0,1)");
  }
  if (masked_dims(spec) >= spec.m) {
    throw std::invalid_argument("no live dimension left after masking");
  }
  if (!(spec.shift >= 0.0)) throw std::invalid_argument("shift must be >= 0");
  if (spec.dist == Dist::GaussianMixture) {
    if (spec.mixture_components < 1) {
      throw std::invalid_argument("mixture needs at least one component");
    }
    if (!(spec.mixture_separation >= 0.0)) {
      throw std::invalid_argument("mixture separation must be >= 0");
    }
  }
}

void fill_gaussian_row(GaussianStream& stream,
                       Eigen::MatrixXd& X, Eigen::Index i) {
  for (Eigen::Index j = 0; j < X.cols(); ++j) X(i, j) = stream.next();
}

}  // namespace

EmbeddingSet sample(const CollapseSpec& spec) {
  require_spec(spec);
  const Eigen::Index n = spec.n;
  const Eigen::Index m = spec.m;
  Eigen::MatrixXd X(n, m);
  GaussianStream stream(spec.seed);

  switch (spec.dist) {
    case Dist::StandardGaussian:
      for (Eigen::Index i = 0; i < n; ++i) fill_gaussian_row(stream, X, i);
      break;
    case Dist::UniformBox:
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) X(i, j) = stream.uniform01_open();
      }
      break;
    case Dist::UniformSphere:
      for (Eigen::Index i = 0; i < n; ++i) {
        double norm = 0.0;
        do {
          fill_gaussian_row(stream, X, i);
          norm = X.row(i).norm();
        } while (norm <= 1e-300);
        X.row(i) /= norm;
      }
      break;
    case Dist::GaussianMixture: {
      const int components = spec.mixture_components;
      // Component centers sit on the diagonal direction (1,..,1)/sqrt(m),
      // adjacent centers separated by mixture_separation, centered at 0.
      const double step = spec.mixture_separation /
                          std::sqrt(static_cast<double>(m));
      const double mid = 0.5 * static_cast<double>(components - 1);
      for (Eigen::Index i = 0; i < n; ++i) {
        const double u = stream.uniform01();
        const int c = std::min(components - 1,
                               static_cast<int>(u * components));
        const double offset = (static_cast<double>(c) - mid) * step;
        fill_gaussian_row(stream, X, i);
        X.row(i).array() += offset;
      }
      break;
    }
  }

  const Eigen::Index masked = masked_dims(spec);
  if (masked > 0) X.rightCols(masked).setZero();
  if (spec.shift != 0.0) X.leftCols(m - masked).array() += spec.shift;
  return EmbeddingSet(std::move(X));
}

double pdf_coordinate_sphere(double y, int m) {
  if (m < 2) throw std::invalid_argument("m must be >= 2");
  if (std::abs(y) >= 1.0) return 0.0;
  const double log_norm = std::lgamma(0.5 * m) -
                          0.5 * std::log(std::numbers::pi) -
                          std::lgamma(0.5 * (m - 1));
  const double exponent = 0.5 * (m - 3);
  return std::exp(log_norm + exponent * std::log1p(-y * y));
}

double pdf_gauss1d(double y, double variance) {
  if (!(variance > 0.0)) throw std::invalid_argument("variance must be > 0");
  const double two_pi = 2.0 * std::numbers::pi;
  return std::exp(-0.5 * y * y / variance) / std::sqrt(two_pi * variance);
}

Histogram1D bin_density(std::span<const double> samples, int bins, double lo,
                        double hi) {
  if (bins < 2) throw std::invalid_argument("need at least 2 bins");
  if (!(lo < hi)) throw std::invalid_argument("lo must be below hi");
  const double width = (hi - lo) / bins;
  std::vector<long long> counts(static_cast<std::size_t>(bins), 0);
  long long overflow = 0;
  long long in_range = 0;
  for (const double x : samples) {
    if (!(x >= lo) || !(x <= hi)) {
      ++overflow;
      continue;
    }
    auto idx = static_cast<Eigen::Index>((x - lo) / width);
    if (idx >= bins) idx = bins - 1;  // x == hi closes the last bin
    ++counts[static_cast<std::size_t>(idx)];
    ++in_range;
  }
  if (in_range == 0) throw EmptyInRange("no sample inside [lo, hi]");

  Histogram1D h;
  h.lo = lo;
  h.hi = hi;
  h.overflow = overflow;
  h.mass.resize(static_cast<std::size_t>(bins));
  for (std::size_t b = 0; b < h.mass.size(); ++b) {
    h.mass[b] = static_cast<double>(counts[b]) / static_cast<double>(in_range);
  }
  return h;
}

namespace {

void require_same_grid(const Histogram1D& h1, const Histogram1D& h2) {
  if (h1.lo != h2.lo || h1.hi != h2.hi || h1.bins() != h2.bins()) {
    throw GridMismatch("histograms use different grids");
  }
}

}  // namespace

double hist_w1(const Histogram1D& h1, const Histogram1D& h2) {
  require_same_grid(h1, h2);
  double cdf1 = 0.0;
  double cdf2 = 0.0;
  double acc = 0.0;
  for (std::size_t b = 0; b < h1.mass.size(); ++b) {
    cdf1 += h1.mass[b];
    cdf2 += h2.mass[b];
    acc += std::abs(cdf1 - cdf2);
  }
  return h1.bin_width() * acc;
}

double hist_kl(const Histogram1D& h1, const Histogram1D& h2) {
  require_same_grid(h1, h2);
  constexpr double kEps = 1e-10;
  const double bins = static_cast<double>(h1.mass.size());
  double acc = 0.0;
  for (std::size_t b = 0; b < h1.mass.size(); ++b) {
    const double p = (h1.mass[b] + kEps) / (1.0 + bins * kEps);
    const double q = (h2.mass[b] + kEps) / (1.0 + bins * kEps);
    acc += p * std::log(p / q);
  }
  return (acc < 0.0 && acc >= -1e-9) ? 0.0 : acc;
}

}  // namespace unimetric
