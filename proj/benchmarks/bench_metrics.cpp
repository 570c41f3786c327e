// Throughput benchmarks for the hot paths: pairwise potential, Wasserstein
// summary, sampling, matrix square root, and histogram construction.

#include <benchmark/benchmark.h>

#include <unimetric/unimetric.hpp>

using namespace unimetric;

namespace {

EmbeddingSet make_sample(Eigen::Index n, Eigen::Index m,
                         Dist dist = Dist::StandardGaussian) {
  CollapseSpec spec;
  spec.n = n;
  spec.m = m;
  spec.dist = dist;
  spec.seed = 42;
  return sample(spec);
}

}  // namespace

static void BM_UniformityLu(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  const Eigen::Index m = state.range(1);
  const UnitEmbeddingSet U = normalize_rows(make_sample(n, m));
  for (auto _ : state) {
    benchmark::DoNotOptimize(uniformity_lu(U));
  }
  state.SetItemsProcessed(state.iterations() * n * (n - 1) / 2);
}
BENCHMARK(BM_UniformityLu)
    ->Args({1024, 64})
    ->Args({4096, 64})
    ->Args({4096, 256})
    ->Args({16384, 256})
    ->Unit(benchmark::kMillisecond);

static void BM_UniformityW2(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  const Eigen::Index m = state.range(1);
  const UnitEmbeddingSet U = normalize_rows(make_sample(n, m));
  for (auto _ : state) {
    benchmark::DoNotOptimize(uniformity_w2(U));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_UniformityW2)
    ->Args({4096, 256})
    ->Args({50000, 256})
    ->Args({50000, 1024})
    ->Unit(benchmark::kMillisecond);

static void BM_Sample(benchmark::State& state) {
  CollapseSpec spec;
  spec.n = state.range(0);
  spec.m = state.range(1);
  spec.dist = static_cast<Dist>(state.range(2));
  spec.seed = 42;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample(spec));
  }
  state.SetItemsProcessed(state.iterations() * spec.n * spec.m);
}
BENCHMARK(BM_Sample)
    ->Args({50000, 256, static_cast<long>(Dist::StandardGaussian)})
    ->Args({50000, 256, static_cast<long>(Dist::UniformSphere)})
    ->Args({50000, 256, static_cast<long>(Dist::GaussianMixture)})
    ->Unit(benchmark::kMillisecond);

static void BM_SqrtmPsd(benchmark::State& state) {
  const Eigen::Index m = state.range(0);
  GaussianStream gs(7);
  Eigen::MatrixXd A(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) A(i, j) = gs.next();
  }
  const Eigen::MatrixXd M = A.transpose() * A;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sqrtm_psd(M));
  }
}
BENCHMARK(BM_SqrtmPsd)->Arg(64)->Arg(256)->Arg(1024)->Unit(
    benchmark::kMillisecond);

static void BM_BinDensity(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  GaussianStream gs(11);
  std::vector<double> samples(static_cast<std::size_t>(n));
  for (double& s : samples) s = gs.next() * 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bin_density(samples, 51, -1.0, 1.0));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_BinDensity)->Arg(200000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
