// Embedding containers, deterministic random streams, and the shared linear
// algebra kernels: moments, symmetric eigensolver, PSD square root, spectrum.

#include <algorithm>
#include <cmath>
#include <functional>

#include <doctest.h>

#include "unimetric/embedding.hpp"
#include "unimetric/errors.hpp"
#include "unimetric/linalg.hpp"
#include "unimetric/rng.hpp"

using namespace unimetric;

TEST_CASE("xoshiro stream is pinned to its reference sequence") {
  Xoshiro256pp g1(1);
  CHECK(g1.next() == 14971601782005023387ull);
  CHECK(g1.next() == 13781649495232077965ull);
  CHECK(g1.next() == 1847458086238483744ull);
  CHECK(g1.next() == 13765271635752736470ull);
  Xoshiro256pp g42(42);
  CHECK(g42.next() == 15021278609987233951ull);
}

TEST_CASE("seed derivation is stateless and stream-separating") {
  CHECK(derive_seed(1, 0) == 11385487063155714807ull);
  CHECK(derive_seed(1, 1) == 1820451397923222333ull);
  CHECK(derive_seed(1, 0) == derive_seed(1, 0));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(1, 1) != derive_seed(1, 2));
}

TEST_CASE("uniform variants respect their ranges") {
  Xoshiro256pp g(123);
  for (int i = 0; i < 10000; ++i) {
    const double u = g.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double p = g.uniform01_positive();
    CHECK(p > 0.0);
    CHECK(p <= 1.0);
    const double o = g.uniform01_open();
    CHECK(o > 0.0);
    CHECK(o < 1.0);
  }
}

TEST_CASE("gaussian stream is pinned and reproducible across instances") {
  GaussianStream a(7);
  CHECK(std::abs(a.next() - 1.1308649617728406) <= 1e-15);
  CHECK(std::abs(a.next() - 2.1234228511806612) <= 1e-15);
  CHECK(std::abs(a.next() - (-0.73097737981595057)) <= 1e-15);
  GaussianStream b(7);
  GaussianStream c(7);
  for (int i = 0; i < 101; ++i) CHECK(b.next() == c.next());
}

TEST_CASE("gaussian stream has standard-normal moments") {
  GaussianStream g(2024);
  const int n = 1000000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = g.next();
    sum += x;
    sum2 += x * x;
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  CHECK(std::abs(mean) < 0.005);
  CHECK(std::abs(var - 1.0) < 0.01);
}

TEST_CASE("embedding sets reject empty or non-finite input") {
  CHECK_THROWS_AS(EmbeddingSet(Eigen::MatrixXd(0, 3)), std::invalid_argument);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Ones(2, 2);
  bad(1, 1) = std::nan("");
  CHECK_THROWS_AS((EmbeddingSet(bad)), std::invalid_argument);
}

TEST_CASE("unit embedding sets validate row norms") {
  Eigen::MatrixXd ok(2, 2);
  ok << 1, 0, 0, -1;
  CHECK_NOTHROW((UnitEmbeddingSet(ok)));
  Eigen::MatrixXd off(1, 2);
  off << 0.5, 0.5;
  CHECK_THROWS_AS((UnitEmbeddingSet(off)), std::invalid_argument);
}

TEST_CASE("normalize_rows produces unit rows and flags zero rows") {
  Eigen::MatrixXd X(3, 2);
  X << 3, 4, -1, 0, 0.5, 0.5;
  const UnitEmbeddingSet U = normalize_rows(EmbeddingSet(X));
  for (Eigen::Index i = 0; i < 3; ++i) {
    CHECK(std::abs(U.data().row(i).norm() - 1.0) <= 1e-12);
  }
  CHECK(std::abs(U.data()(0, 0) - 0.6) <= 1e-15);

  Eigen::MatrixXd Z = Eigen::MatrixXd::Ones(3, 2);
  Z.row(1).setZero();
  try {
    normalize_rows(EmbeddingSet(Z));
    FAIL("expected ZeroNormRow");
  } catch (const ZeroNormRow& e) {
    CHECK(e.row == 1);
  }
}

TEST_CASE("row moments use the population divisor") {
  Eigen::MatrixXd X(2, 2);
  X << 0, 0, 2, 2;
  const GaussianSummary g = row_moments(X);
  CHECK(g.mean(0) == 1.0);
  CHECK(g.mean(1) == 1.0);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CHECK(g.cov(i, j) == 1.0);
    }
  }
}

TEST_CASE("exactly-zero columns give exactly-zero moment entries") {
  GaussianStream s(5);
  Eigen::MatrixXd X(100, 4);
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    for (Eigen::Index j = 0; j < X.cols(); ++j) X(i, j) = s.next();
  }
  X.col(2).setZero();
  const GaussianSummary g = row_moments(X);
  CHECK(g.mean(2) == 0.0);
  for (Eigen::Index j = 0; j < 4; ++j) {
    CHECK(g.cov(2, j) == 0.0);
    CHECK(g.cov(j, 2) == 0.0);
  }
}

TEST_CASE("row moments are permutation independent at tolerance") {
  GaussianStream s(11);
  Eigen::MatrixXd X(5000, 6);
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    for (Eigen::Index j = 0; j < X.cols(); ++j) X(i, j) = s.next();
  }
  const GaussianSummary a = row_moments(X);
  const GaussianSummary b = row_moments(X.colwise().reverse());
  CHECK((a.mean - b.mean).lpNorm<Eigen::Infinity>() <= 1e-12);
  CHECK((a.cov - b.cov).lpNorm<Eigen::Infinity>() <= 1e-12);
}

TEST_CASE("unit-row moments satisfy the trace identity") {
  GaussianStream s(17);
  Eigen::MatrixXd X(2000, 8);
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    for (Eigen::Index j = 0; j < X.cols(); ++j) X(i, j) = s.next();
  }
  const GaussianSummary g = gaussian_summary(normalize_rows(EmbeddingSet(X)));
  CHECK(std::abs(g.cov.trace() + g.mean.squaredNorm() - 1.0) <= 1e-12);
}

TEST_CASE("symmetric eigendecomposition is descending and reconstructs") {
  Eigen::MatrixXd S(2, 2);
  S << 2, 1, 1, 2;
  const SymmetricEigen e = sym_eigen(S);
  CHECK(std::abs(e.values(0) - 3.0) <= 1e-13);
  CHECK(std::abs(e.values(1) - 1.0) <= 1e-13);
  const Eigen::MatrixXd back =
      e.vectors * e.values.asDiagonal() * e.vectors.transpose();
  CHECK((back - S).lpNorm<Eigen::Infinity>() <= 1e-12);
  const Eigen::MatrixXd gram = e.vectors.transpose() * e.vectors;
  CHECK((gram - Eigen::MatrixXd::Identity(2, 2)).lpNorm<Eigen::Infinity>() <=
        1e-12);

  Eigen::MatrixXd A(2, 2);
  A << 0, 1, 0, 0;
  CHECK_THROWS_AS(sym_eigen(A), NotSymmetric);
  CHECK_THROWS_AS(sym_eigen(Eigen::MatrixXd(2, 3)), NotSymmetric);
}

TEST_CASE("psd square root squares back and rejects indefinite input") {
  GaussianStream s(23);
  Eigen::MatrixXd A(12, 12);
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) A(i, j) = s.next();
  }
  const Eigen::MatrixXd S = A.transpose() * A;
  const Eigen::MatrixXd R = sqrtm_psd(S);
  CHECK((R - R.transpose()).lpNorm<Eigen::Infinity>() <= 1e-12);
  const double rel =
      (R * R - S).lpNorm<Eigen::Infinity>() / S.lpNorm<Eigen::Infinity>();
  CHECK(rel <= 1e-6);

  Eigen::MatrixXd neg = Eigen::MatrixXd::Identity(2, 2);
  neg(0, 0) = -1.0;
  CHECK_THROWS_AS(sqrtm_psd(neg), NotPSD);
}

TEST_CASE("spectrum of an isotropic gaussian sample concentrates at 1") {
  GaussianStream s(31);
  Eigen::MatrixXd X(100000, 8);
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    for (Eigen::Index j = 0; j < X.cols(); ++j) X(i, j) = s.next();
  }
  const Eigen::VectorXd lambdas = covariance_spectrum(EmbeddingSet(X));
  CHECK(lambdas.size() == 8);
  for (Eigen::Index i = 0; i < lambdas.size(); ++i) {
    CHECK(std::abs(lambdas[i] - 1.0) < 0.05);
  }
  CHECK(std::is_sorted(lambdas.data(), lambdas.data() + lambdas.size(),
                       std::greater<double>()));
}

TEST_CASE("zeroed trailing dimensions give exactly-zero eigenvalues") {
  GaussianStream s(37);
  Eigen::MatrixXd X(500, 8);
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    for (Eigen::Index j = 0; j < X.cols(); ++j) X(i, j) = s.next();
  }
  X.rightCols(4).setZero();
  const Eigen::VectorXd lambdas = covariance_spectrum(EmbeddingSet(X));
  for (Eigen::Index i = 4; i < 8; ++i) CHECK(lambdas[i] == 0.0);
}

TEST_CASE("degenerate spectra") {
  Eigen::MatrixXd same(2, 3);
  same << 1, 2, 3, 1, 2, 3;
  const Eigen::VectorXd lambdas = covariance_spectrum(EmbeddingSet(same));
  CHECK(lambdas.lpNorm<Eigen::Infinity>() == 0.0);

  CHECK_THROWS_AS(covariance_spectrum(EmbeddingSet(Eigen::MatrixXd::Ones(1, 3))),
                  TooFewInstances);
}
