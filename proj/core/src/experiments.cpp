#include "unimetric/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "unimetric/csv.hpp"
#include "unimetric/metrics.hpp"
#include "unimetric/rng.hpp"
#include "unimetric/transforms.hpp"

namespace unimetric {

namespace {

const MetricConfig kMetricCfg{};

struct CellMetrics {
  double minus_lu;
  double minus_w2;
};

CellMetrics cell_metrics(const EmbeddingSet& E) {
  const UnitEmbeddingSet U = normalize_rows(E);
  return {-uniformity_lu(U, kMetricCfg), -uniformity_w2(U)};
}

void add_meta(ExperimentTable& table, const std::string& key,
              const std::string& value) {
  table.meta.emplace_back(key, value);
}

std::string join_doubles(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += format_double(values[i]);
  }
  return out;
}

std::string join_indices(const std::vector<Eigen::Index>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

double num_at(const ExperimentTable& table, std::size_t row,
              const std::string& column) {
  const auto it =
      std::find(table.columns.begin(), table.columns.end(), column);
  if (it == table.columns.end()) {
    throw std::invalid_argument("table has no column " + column);
  }
  const auto col = static_cast<std::size_t>(it - table.columns.begin());
  return std::get<double>(table.rows[row][col]);
}

const std::string& str_at(const ExperimentTable& table, std::size_t row,
                          const std::string& column) {
  const auto it =
      std::find(table.columns.begin(), table.columns.end(), column);
  if (it == table.columns.end()) {
    throw std::invalid_argument("table has no column " + column);
  }
  const auto col = static_cast<std::size_t>(it - table.columns.begin());
  return std::get<std::string>(table.rows[row][col]);
}

std::vector<std::size_t> rows_sorted_by(const ExperimentTable& table,
                                        const std::string& column) {
  std::vector<std::size_t> order(table.rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return num_at(table, a, column) < num_at(table, b, column);
                   });
  return order;
}

}  // namespace

std::vector<double> default_etas() {
  return {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
}

std::vector<Eigen::Index> default_sweep_ms() {
  return {16, 32, 64, 128, 256, 512, 1024};
}

std::vector<Eigen::Index> default_coord_ms() {
  return {2, 4, 8, 16, 32, 64, 128, 256};
}

CollapseSpec default_clone_base() {
  CollapseSpec base;
  base.n = 10000;
  base.m = 64;
  base.eta = 0.5;
  base.seed = kDefaultSeed;
  return base;
}

ExperimentTable collapse_sweep(const std::vector<double>& etas,
                               Eigen::Index m, Eigen::Index n,
                               std::uint64_t seed) {
  if (etas.empty()) throw std::invalid_argument("etas must be non-empty");
  for (const double eta : etas) {
    if (!(eta >= 0.0 && eta <= 0.9)) {
      throw std::invalid_argument("etas must lie in [0, 0.9]");
    }
  }
  ExperimentTable table;
  table.name = "collapse-sweep";
  table.columns = {"eta", "minus_lu", "minus_w2"};
  add_meta(table, "etas", join_doubles(etas));
  add_meta(table, "m", std::to_string(m));
  add_meta(table, "n", std::to_string(n));
  add_meta(table, "seed", std::to_string(seed));
  add_meta(table, "t", format_double(kMetricCfg.t));

  for (std::size_t i = 0; i < etas.size(); ++i) {
    CollapseSpec spec;
    spec.n = n;
    spec.m = m;
    spec.eta = etas[i];
    spec.seed = derive_seed(seed, i);
    const CellMetrics cell = cell_metrics(sample(spec));
    table.rows.push_back({etas[i], cell.minus_lu, cell.minus_w2});
  }
  return table;
}

ExperimentTable dimension_sweep(const std::vector<Eigen::Index>& ms,
                                const std::vector<double>& etas,
                                Eigen::Index n, std::uint64_t seed) {
  if (ms.empty() || etas.empty()) {
    throw std::invalid_argument("ms and etas must be non-empty");
  }
  ExperimentTable table;
  table.name = "dimension-sweep";
  table.columns = {"m", "eta", "minus_lu", "minus_w2"};
  add_meta(table, "ms", join_indices(ms));
  add_meta(table, "etas", join_doubles(etas));
  add_meta(table, "n", std::to_string(n));
  add_meta(table, "seed", std::to_string(seed));
  add_meta(table, "t", format_double(kMetricCfg.t));

  std::uint64_t cell_index = 0;
  for (const Eigen::Index m : ms) {
    for (const double eta : etas) {
      CollapseSpec spec;
      spec.n = n;
      spec.m = m;
      spec.eta = eta;
      spec.seed = derive_seed(seed, cell_index++);
      const CellMetrics cell = cell_metrics(sample(spec));
      table.rows.push_back(
          {static_cast<double>(m), eta, cell.minus_lu, cell.minus_w2});
    }
  }
  return table;
}

ExperimentTable clone_properties(CloneKind kind, int steps,
                                 CollapseSpec base) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (kind == CloneKind::FCC &&
      base.m * static_cast<Eigen::Index>(steps + 1) > 4096) {
    throw std::invalid_argument(
        "feature cloning is capped at 4096 total columns");
  }
  ExperimentTable table;
  switch (kind) {
    case CloneKind::ICC: table.name = "icc"; break;
    case CloneKind::FCC: table.name = "fcc"; break;
    case CloneKind::FBC: table.name = "fbc"; break;
  }
  table.columns = {"step", "minus_lu", "minus_w2"};
  add_meta(table, "steps", std::to_string(steps));
  add_meta(table, "n", std::to_string(base.n));
  add_meta(table, "m", std::to_string(base.m));
  add_meta(table, "eta", format_double(base.eta));
  add_meta(table, "shift", format_double(base.shift));
  add_meta(table, "dist", dist_name(base.dist));
  add_meta(table, "mixture_components",
           std::to_string(base.mixture_components));
  add_meta(table, "mixture_separation",
           format_double(base.mixture_separation));
  add_meta(table, "seed", std::to_string(base.seed));
  add_meta(table, "t", format_double(kMetricCfg.t));

  const EmbeddingSet E0 = sample(base);
  for (int s = 0; s <= steps; ++s) {
    CellMetrics cell{};
    if (s == 0) {
      cell = cell_metrics(E0);
    } else {
      switch (kind) {
        case CloneKind::ICC:
          cell = cell_metrics(instance_clone(E0, s + 1));
          break;
        case CloneKind::FCC:
          cell = cell_metrics(feature_clone(E0, s + 1));
          break;
        case CloneKind::FBC:
          cell = cell_metrics(zero_pad(E0, static_cast<Eigen::Index>(s) *
                                               base.m));
          break;
      }
    }
    table.rows.push_back(
        {static_cast<double>(s), cell.minus_lu, cell.minus_w2});
  }
  return table;
}

ExperimentTable coordinate_convergence(const std::vector<Eigen::Index>& ms,
                                       Eigen::Index n, int bins, int reps,
                                       std::uint64_t seed) {
  if (ms.empty()) throw std::invalid_argument("ms must be non-empty");
  for (const Eigen::Index m : ms) {
    if (m < 2) throw std::invalid_argument("sphere coordinate needs m >= 2");
  }
  if (reps < 1) throw std::invalid_argument("reps must be >= 1");
  ExperimentTable table;
  table.name = "coord-convergence";
  table.columns = {"m", "w1_mean", "w1_std"};
  add_meta(table, "ms", join_indices(ms));
  add_meta(table, "n", std::to_string(n));
  add_meta(table, "bins", std::to_string(bins));
  add_meta(table, "reps", std::to_string(reps));
  add_meta(table, "seed", std::to_string(seed));

  for (std::size_t i = 0; i < ms.size(); ++i) {
    const Eigen::Index m = ms[i];
    const double inv_root_m = 1.0 / std::sqrt(static_cast<double>(m));
    std::vector<double> w1(static_cast<std::size_t>(reps));
    for (int r = 0; r < reps; ++r) {
      const std::uint64_t pair_index =
          2 * (static_cast<std::uint64_t>(i) * reps +
               static_cast<std::uint64_t>(r));
      CollapseSpec spec;
      spec.n = n;
      spec.m = m;
      spec.dist = Dist::UniformSphere;
      spec.seed = derive_seed(seed, pair_index);
      const EmbeddingSet sphere = sample(spec);
      const Histogram1D h_sphere = bin_density(
          std::span<const double>(sphere.data().col(0).data(),
                                  static_cast<std::size_t>(n)),
          bins, -1.0, 1.0);

      GaussianStream gauss(derive_seed(seed, pair_index + 1));
      std::vector<double> draws(static_cast<std::size_t>(n));
      for (double& d : draws) d = gauss.next() * inv_root_m;
      const Histogram1D h_gauss = bin_density(draws, bins, -1.0, 1.0);
      w1[static_cast<std::size_t>(r)] = hist_w1(h_sphere, h_gauss);
    }
    const double mean =
        std::accumulate(w1.begin(), w1.end(), 0.0) / w1.size();
    double var = 0.0;
    for (const double v : w1) var += (v - mean) * (v - mean);
    var /= static_cast<double>(w1.size());
    table.rows.push_back(
        {static_cast<double>(m), mean, std::sqrt(var)});
  }
  return table;
}

ExperimentTable distribution_comparison(Eigen::Index n, Eigen::Index m,
                                        std::uint64_t seed) {
  ExperimentTable table;
  table.name = "dist-compare";
  table.columns = {"dist", "minus_lu", "minus_w2"};
  add_meta(table, "n", std::to_string(n));
  add_meta(table, "m", std::to_string(m));
  add_meta(table, "seed", std::to_string(seed));
  add_meta(table, "mixture_components", "2");
  add_meta(table, "mixture_separation", format_double(4.0));
  add_meta(table, "gaussian_shift", format_double(1.0));
  add_meta(table, "t", format_double(kMetricCfg.t));

  struct Entry {
    const char* label;
    Dist dist;
    double shift;
  };
  const Entry entries[] = {
      {"gaussian", Dist::StandardGaussian, 0.0},
      {"uniform-box", Dist::UniformBox, 0.0},
      {"mixture", Dist::GaussianMixture, 0.0},
      {"shifted-gaussian", Dist::StandardGaussian, 1.0},
  };
  for (std::size_t i = 0; i < 4; ++i) {
    CollapseSpec spec;
    spec.n = n;
    spec.m = m;
    spec.dist = entries[i].dist;
    spec.shift = entries[i].shift;
    spec.seed = derive_seed(seed, i);
    const CellMetrics cell = cell_metrics(sample(spec));
    table.rows.push_back(
        {std::string(entries[i].label), cell.minus_lu, cell.minus_w2});
  }
  return table;
}

ExperimentTable mean_shift(const std::vector<double>& ks, Eigen::Index n,
                           Eigen::Index m, std::uint64_t seed) {
  if (ks.empty()) throw std::invalid_argument("ks must be non-empty");
  ExperimentTable table;
  table.name = "mean-shift";
  table.columns = {"k", "minus_w2", "mean_norm"};
  add_meta(table, "ks", join_doubles(ks));
  add_meta(table, "n", std::to_string(n));
  add_meta(table, "m", std::to_string(m));
  add_meta(table, "seed", std::to_string(seed));

  for (std::size_t i = 0; i < ks.size(); ++i) {
    CollapseSpec spec;
    spec.n = n;
    spec.m = m;
    spec.shift = ks[i];
    spec.seed = derive_seed(seed, i);
    const UnitEmbeddingSet U = normalize_rows(sample(spec));
    const GaussianSummary summary = gaussian_summary(U);
    table.rows.push_back({ks[i], -w2_to_isotropic(summary, m),
                          summary.mean.norm()});
  }
  return table;
}

ExperimentTable desiderata_matrix(int trials, Eigen::Index n, Eigen::Index m,
                                  std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (n < 2) throw std::invalid_argument("needs n >= 2");
  ExperimentTable table;
  table.name = "table1";
  table.columns = {"property", "metric", "satisfied"};
  add_meta(table, "trials", std::to_string(trials));
  add_meta(table, "n", std::to_string(n));
  add_meta(table, "m", std::to_string(m));
  add_meta(table, "seed", std::to_string(seed));
  add_meta(table, "t", format_double(kMetricCfg.t));

  constexpr double kTol = checks::kEqualityTol;
  // held[property][metric], metric 0 = minus_lu, 1 = minus_w2
  bool held[5][2];
  for (auto& row : held) row[0] = row[1] = true;

  const auto equal = [&](double a, double b) { return std::abs(a - b) <= kTol; };
  const auto drops = [&](double after, double before) {
    return after < before - kTol;
  };

  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t trial_seed = derive_seed(seed, trial);
    CollapseSpec spec;
    spec.n = n;
    spec.m = m;
    spec.seed = trial_seed;
    const EmbeddingSet E = sample(spec);
    const CellMetrics base = cell_metrics(E);

    // instance permutation
    Xoshiro256pp perm_gen(derive_seed(trial_seed, 101));
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), Eigen::Index{0});
    for (Eigen::Index i = n - 1; i > 0; --i) {
      const auto j = static_cast<Eigen::Index>(
          perm_gen.uniform01() * static_cast<double>(i + 1));
      std::swap(perm[static_cast<std::size_t>(i)],
                perm[static_cast<std::size_t>(j)]);
    }
    const CellMetrics ipc = cell_metrics(permute(E, perm));
    held[0][0] &= equal(ipc.minus_lu, base.minus_lu);
    held[0][1] &= equal(ipc.minus_w2, base.minus_w2);

    // instance scaling, factors in (0.1, 10)
    Xoshiro256pp scale_gen(derive_seed(trial_seed, 102));
    Eigen::VectorXd lambdas(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      lambdas[i] = 0.1 + 9.9 * scale_gen.uniform01_open();
    }
    const CellMetrics isc = cell_metrics(scale_rows(E, lambdas));
    held[1][0] &= equal(isc.minus_lu, base.minus_lu);
    held[1][1] &= equal(isc.minus_w2, base.minus_w2);

    // instance cloning: both metrics must be unchanged to count
    const CellMetrics icc = cell_metrics(instance_clone(E, 2));
    held[2][0] &= equal(icc.minus_lu, base.minus_lu);
    held[2][1] &= equal(icc.minus_w2, base.minus_w2);

    // feature cloning and zero padding: the metric must strictly drop
    const CellMetrics fcc = cell_metrics(feature_clone(E, 2));
    held[3][0] &= drops(fcc.minus_lu, base.minus_lu);
    held[3][1] &= drops(fcc.minus_w2, base.minus_w2);

    const CellMetrics fbc = cell_metrics(zero_pad(E, m));
    held[4][0] &= drops(fbc.minus_lu, base.minus_lu);
    held[4][1] &= drops(fbc.minus_w2, base.minus_w2);
  }

  const char* properties[5] = {"IPC", "ISC", "ICC", "FCC", "FBC"};
  const char* metrics[2] = {"minus_lu", "minus_w2"};
  for (int p = 0; p < 5; ++p) {
    for (int q = 0; q < 2; ++q) {
      table.rows.push_back({std::string(properties[p]),
                            std::string(metrics[q]),
                            held[p][q] ? 1.0 : 0.0});
    }
  }
  return table;
}

namespace {

void check_strictly_monotone(const ExperimentTable& table,
                             const std::string& key_col,
                             const std::string& value_col, bool decreasing,
                             std::vector<std::string>& violations) {
  const std::vector<std::size_t> order = rows_sorted_by(table, key_col);
  for (std::size_t i = 1; i < order.size(); ++i) {
    const double prev = num_at(table, order[i - 1], value_col);
    const double cur = num_at(table, order[i], value_col);
    const bool ok = decreasing ? (cur < prev) : (cur > prev);
    if (!ok) {
      violations.push_back(
          value_col + " is not strictly " +
          (decreasing ? "decreasing" : "increasing") + " at " + key_col +
          "=" + format_double(num_at(table, order[i], key_col)));
    }
  }
}

void check_collapse_sweep(const ExperimentTable& table,
                          std::vector<std::string>& violations) {
  check_strictly_monotone(table, "eta", "minus_w2", true, violations);
  // The near-flatness of the log potential under collapse is a wide-
  // embedding effect; in low dimension the potential responds strongly, so
  // the range bound applies only from the default width upward.
  Eigen::Index m = 0;
  for (const auto& [key, value] : table.meta) {
    if (key == "m") m = static_cast<Eigen::Index>(std::stoll(value));
  }
  if (m < 256) return;
  double lo = num_at(table, 0, "minus_lu");
  double hi = lo;
  for (std::size_t r = 1; r < table.rows.size(); ++r) {
    const double v = num_at(table, r, "minus_lu");
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!(hi - lo < checks::kCollapseLuRangeBound)) {
    violations.push_back("minus_lu range " + format_double(hi - lo) +
                         " reaches bound " +
                         format_double(checks::kCollapseLuRangeBound));
  }
}

void check_dimension_sweep(const ExperimentTable& table,
                           std::vector<std::string>& violations) {
  std::vector<double> etas;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const double eta = num_at(table, r, "eta");
    if (std::find(etas.begin(), etas.end(), eta) == etas.end()) {
      etas.push_back(eta);
    }
  }
  for (const double eta : etas) {
    std::vector<double> w2s;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      if (num_at(table, r, "eta") == eta) {
        w2s.push_back(num_at(table, r, "minus_w2"));
      }
    }
    const double mean =
        std::accumulate(w2s.begin(), w2s.end(), 0.0) / w2s.size();
    double var = 0.0;
    for (const double v : w2s) var += (v - mean) * (v - mean);
    var /= static_cast<double>(w2s.size());
    if (!(std::sqrt(var) < checks::kDimensionW2StddevBound)) {
      violations.push_back("minus_w2 stddev across m at eta=" +
                           format_double(eta) + " is " +
                           format_double(std::sqrt(var)) +
                           ", reaches bound " +
                           format_double(checks::kDimensionW2StddevBound));
    }
  }
  // gap between light and heavy collapse at the largest default dimension
  double lu_light = 0.0, lu_heavy = 0.0;
  bool have_light = false, have_heavy = false;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (num_at(table, r, "m") != 1024.0) continue;
    const double eta = num_at(table, r, "eta");
    if (eta == 0.25) { lu_light = num_at(table, r, "minus_lu"); have_light = true; }
    if (eta == 0.75) { lu_heavy = num_at(table, r, "minus_lu"); have_heavy = true; }
  }
  if (have_light && have_heavy &&
      !(std::abs(lu_light - lu_heavy) < checks::kDimensionLuGapBound)) {
    violations.push_back(
        "minus_lu gap at m=1024 between eta=0.25 and eta=0.75 is " +
        format_double(std::abs(lu_light - lu_heavy)) + ", reaches bound " +
        format_double(checks::kDimensionLuGapBound));
  }
}

void check_clone(const ExperimentTable& table, bool w2_constant,
                 std::vector<std::string>& violations) {
  const std::vector<std::size_t> order = rows_sorted_by(table, "step");
  const double lu0 = num_at(table, order[0], "minus_lu");
  const double w20 = num_at(table, order[0], "minus_w2");
  for (std::size_t i = 1; i < order.size(); ++i) {
    const double lu = num_at(table, order[i], "minus_lu");
    const double w2 = num_at(table, order[i], "minus_w2");
    const double step = num_at(table, order[i], "step");
    if (w2_constant) {
      if (!(std::abs(w2 - w20) <= checks::kEqualityTol)) {
        violations.push_back("minus_w2 moved by " +
                             format_double(std::abs(w2 - w20)) + " at step " +
                             format_double(step));
      }
      const double lu_prev = num_at(table, order[i - 1], "minus_lu");
      if (!(lu <= lu_prev + checks::kEqualityTol)) {
        violations.push_back("minus_lu increased at step " +
                             format_double(step));
      }
    } else {
      if (!(std::abs(lu - lu0) <= checks::kEqualityTol)) {
        violations.push_back("minus_lu moved by " +
                             format_double(std::abs(lu - lu0)) + " at step " +
                             format_double(step));
      }
      const double w2_prev = num_at(table, order[i - 1], "minus_w2");
      if (!(w2 < w2_prev)) {
        violations.push_back("minus_w2 did not strictly drop at step " +
                             format_double(step));
      }
    }
  }
}

void check_coordinate_convergence(const ExperimentTable& table,
                                  std::vector<std::string>& violations) {
  const std::vector<std::size_t> order = rows_sorted_by(table, "m");
  int inversions = 0;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (num_at(table, order[i], "w1_mean") >
        num_at(table, order[i - 1], "w1_mean")) {
      ++inversions;
    }
  }
  if (inversions > checks::kCoordAllowedInversions) {
    violations.push_back("w1_mean has " + std::to_string(inversions) +
                         " inversions over m, more than the allowed " +
                         std::to_string(checks::kCoordAllowedInversions));
  }
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (num_at(table, r, "m") == 256.0 &&
        !(num_at(table, r, "w1_mean") < checks::kCoordFinalW1Bound)) {
      violations.push_back("w1_mean at m=256 is " +
                           format_double(num_at(table, r, "w1_mean")) +
                           ", reaches bound " +
                           format_double(checks::kCoordFinalW1Bound));
    }
  }
}

void check_distribution_comparison(const ExperimentTable& table,
                                   std::vector<std::string>& violations) {
  std::size_t gauss_row = table.rows.size();
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (str_at(table, r, "dist") == "gaussian") gauss_row = r;
  }
  if (gauss_row == table.rows.size()) {
    violations.push_back("table has no gaussian row");
    return;
  }
  for (const char* column : {"minus_lu", "minus_w2"}) {
    const double best = num_at(table, gauss_row, column);
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      if (r == gauss_row) continue;
      if (!(best > num_at(table, r, column))) {
        violations.push_back(std::string("gaussian does not maximize ") +
                             column + " against " + str_at(table, r, "dist"));
      }
    }
  }
}

void check_mean_shift(const ExperimentTable& table,
                      std::vector<std::string>& violations) {
  check_strictly_monotone(table, "k", "minus_w2", true, violations);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (num_at(table, r, "k") == 32.0 &&
        !(num_at(table, r, "mean_norm") > checks::kMeanShiftFinalMeanNorm)) {
      violations.push_back("mean_norm at k=32 is " +
                           format_double(num_at(table, r, "mean_norm")) +
                           ", not above " +
                           format_double(checks::kMeanShiftFinalMeanNorm));
    }
  }
}

void check_desiderata(const ExperimentTable& table,
                      std::vector<std::string>& violations) {
  const auto expected = [](const std::string& property,
                           const std::string& metric) {
    if (metric == "minus_w2") return 1.0;
    return (property == "IPC" || property == "ISC") ? 1.0 : 0.0;
  };
  if (table.rows.size() != 10) {
    violations.push_back("expected 10 rows, found " +
                         std::to_string(table.rows.size()));
    return;
  }
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const std::string& property = str_at(table, r, "property");
    const std::string& metric = str_at(table, r, "metric");
    const double got = num_at(table, r, "satisfied");
    if (got != expected(property, metric)) {
      violations.push_back(property + " under " + metric + " is " +
                           (got == 1.0 ? "satisfied" : "violated") +
                           " but should be " +
                           (expected(property, metric) == 1.0 ? "satisfied"
                                                              : "violated"));
    }
  }
}

}  // namespace

std::vector<std::string> self_check(const ExperimentTable& table) {
  std::vector<std::string> violations;
  if (table.name == "collapse-sweep") {
    check_collapse_sweep(table, violations);
  } else if (table.name == "dimension-sweep") {
    check_dimension_sweep(table, violations);
  } else if (table.name == "icc") {
    check_clone(table, true, violations);
  } else if (table.name == "fcc" || table.name == "fbc") {
    check_clone(table, false, violations);
  } else if (table.name == "coord-convergence") {
    check_coordinate_convergence(table, violations);
  } else if (table.name == "dist-compare") {
    check_distribution_comparison(table, violations);
  } else if (table.name == "mean-shift") {
    check_mean_shift(table, violations);
  } else if (table.name == "table1") {
    check_desiderata(table, violations);
  } else {
    violations.push_back("unknown table name " + table.name);
  }
  return violations;
}

namespace {

std::string meta_get(const ExperimentTable& table, const std::string& key) {
  for (const auto& [k, v] : table.meta) {
    if (k == key) return v;
  }
  throw std::invalid_argument("meta block is missing key " + key);
}

std::vector<std::string> split_list(const std::string& joined) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= joined.size()) {
    const std::size_t comma = joined.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(joined.substr(start));
      break;
    }
    out.push_back(joined.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& joined) {
  std::vector<double> out;
  for (const std::string& tok : split_list(joined)) out.push_back(std::stod(tok));
  return out;
}

std::vector<Eigen::Index> parse_indices(const std::string& joined) {
  std::vector<Eigen::Index> out;
  for (const std::string& tok : split_list(joined)) {
    out.push_back(static_cast<Eigen::Index>(std::stoll(tok)));
  }
  return out;
}

Dist parse_dist(const std::string& name) {
  for (const Dist d : {Dist::StandardGaussian, Dist::UniformBox,
                       Dist::GaussianMixture, Dist::UniformSphere}) {
    if (dist_name(d) == name) return d;
  }
  throw std::invalid_argument("unknown distribution name " + name);
}

}  // namespace

ExperimentTable rerun_from_meta(const ExperimentTable& table) {
  const auto n_of = [&] {
    return static_cast<Eigen::Index>(std::stoll(meta_get(table, "n")));
  };
  const auto m_of = [&] {
    return static_cast<Eigen::Index>(std::stoll(meta_get(table, "m")));
  };
  const auto seed_of = [&] { return std::stoull(meta_get(table, "seed")); };

  if (table.name == "collapse-sweep") {
    return collapse_sweep(parse_doubles(meta_get(table, "etas")), m_of(),
                          n_of(), seed_of());
  }
  if (table.name == "dimension-sweep") {
    return dimension_sweep(parse_indices(meta_get(table, "ms")),
                           parse_doubles(meta_get(table, "etas")), n_of(),
                           seed_of());
  }
  if (table.name == "icc" || table.name == "fcc" || table.name == "fbc") {
    CollapseSpec base;
    base.n = n_of();
    base.m = m_of();
    base.eta = std::stod(meta_get(table, "eta"));
    base.shift = std::stod(meta_get(table, "shift"));
    base.dist = parse_dist(meta_get(table, "dist"));
    base.mixture_components =
        static_cast<int>(std::stol(meta_get(table, "mixture_components")));
    base.mixture_separation =
        std::stod(meta_get(table, "mixture_separation"));
    base.seed = seed_of();
    const CloneKind kind = table.name == "icc"   ? CloneKind::ICC
                           : table.name == "fcc" ? CloneKind::FCC
                                                 : CloneKind::FBC;
    return clone_properties(kind, std::stoi(meta_get(table, "steps")), base);
  }
  if (table.name == "coord-convergence") {
    return coordinate_convergence(parse_indices(meta_get(table, "ms")),
                                  n_of(), std::stoi(meta_get(table, "bins")),
                                  std::stoi(meta_get(table, "reps")),
                                  seed_of());
  }
  if (table.name == "dist-compare") {
    return distribution_comparison(n_of(), m_of(), seed_of());
  }
  if (table.name == "mean-shift") {
    return mean_shift(parse_doubles(meta_get(table, "ks")), n_of(), m_of(),
                      seed_of());
  }
  if (table.name == "table1") {
    return desiderata_matrix(std::stoi(meta_get(table, "trials")), n_of(),
                             m_of(), seed_of());
  }
  throw std::invalid_argument("unknown table name " + table.name);
}

}  // namespace unimetric
