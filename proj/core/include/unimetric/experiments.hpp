#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "unimetric/synthetic.hpp"

namespace unimetric {

// Numeric or categorical table entry.
using Cell = std::variant<double, std::string>;

// One emitted experiment: named columns, grid-ordered rows, and a meta block
// (every parameter and seed) sufficient to re-run the table bit-identically.
struct ExperimentTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> meta;
};

inline constexpr std::uint64_t kDefaultSeed = 1;

// Self-check bounds. Every run_* post-condition asserted by self_check()
// lives here so the tests and the CLI agree on one set of constants.
namespace checks {
inline constexpr double kEqualityTol = 1e-10;
// Empirical band of the log-potential metric across the default collapse
// grid is ~0.125 in population (it moves little under collapse, which is
// the point of the sweep); the bound allows sampling noise on top. Only
// enforced for m >= 256: the flatness is a wide-embedding effect.
inline constexpr double kCollapseLuRangeBound = 0.2;
inline constexpr double kDimensionW2StddevBound = 0.02;
inline constexpr double kDimensionLuGapBound = 0.1;
inline constexpr double kCoordFinalW1Bound = 3e-3;
inline constexpr int kCoordAllowedInversions = 1;
inline constexpr double kMeanShiftFinalMeanNorm = 0.99;
}  // namespace checks

std::vector<double> default_etas();            // 0.0, 0.1, ..., 0.8
std::vector<Eigen::Index> default_sweep_ms();  // 16, 32, ..., 1024
std::vector<Eigen::Index> default_coord_ms();  // 2, 4, ..., 256
CollapseSpec default_clone_base();  // n=10^4, m=64, eta=0.5, seed default

// Collapse sweep: one row (eta, minus_lu, minus_w2) per collapse fraction,
// standard Gaussian base, fresh derived seed per cell.
ExperimentTable collapse_sweep(const std::vector<double>& etas = default_etas(),
                               Eigen::Index m = 256, Eigen::Index n = 50000,
                               std::uint64_t seed = kDefaultSeed);

// Dimension sweep: rows (m, eta, minus_lu, minus_w2) over the m x eta grid.
ExperimentTable dimension_sweep(
    const std::vector<Eigen::Index>& ms = default_sweep_ms(),
    const std::vector<double>& etas = {0.25, 0.5, 0.75},
    Eigen::Index n = 50000, std::uint64_t seed = kDefaultSeed);

enum class CloneKind { ICC, FCC, FBC };

// Clone-growth study: step s applies the operator s times to one base draw
// (s+1 stacked copies, s+1 concatenated copies, or s*m appended zeros).
// Rows are (step, minus_lu, minus_w2). FCC keeps m*(steps+1) <= 4096.
ExperimentTable clone_properties(CloneKind kind, int steps = 4,
                                 CollapseSpec base = default_clone_base());

// Coordinate-vs-Gaussian convergence: rows (m, w1_mean, w1_std) of the 1-D
// Wasserstein distance between the binned first coordinate of a uniform
// sphere sample and equally binned N(0,1/m) draws, averaged over reps.
ExperimentTable coordinate_convergence(
    const std::vector<Eigen::Index>& ms = default_coord_ms(),
    Eigen::Index n = 200000, int bins = 51, int reps = 10,
    std::uint64_t seed = kDefaultSeed);

// Rows (dist, minus_lu, minus_w2) for the four comparison distributions:
// standard Gaussian, uniform box, two-component mixture (separation 4),
// and mean-shifted Gaussian (shift 1).
ExperimentTable distribution_comparison(Eigen::Index n = 50000,
                                        Eigen::Index m = 64,
                                        std::uint64_t seed = kDefaultSeed);

// Rows (k, minus_w2, mean_norm) for a standard Gaussian shifted by k along
// every coordinate; mean_norm is |mean of the normalized rows|.
ExperimentTable mean_shift(
    const std::vector<double>& ks = {0, 0.5, 1, 2, 4, 8, 16, 32},
    Eigen::Index n = 10000, Eigen::Index m = 2,
    std::uint64_t seed = kDefaultSeed);

// Desiderata matrix: rows (property, metric, satisfied) for the five
// properties (IPC, ISC, ICC, FCC, FBC) and both metrics. A property counts
// satisfied only if it held in every trial: equalities within 1e-10,
// decreases strict beyond 1e-10.
ExperimentTable desiderata_matrix(int trials = 100, Eigen::Index n = 512,
                                  Eigen::Index m = 64,
                                  std::uint64_t seed = kDefaultSeed);

// Applies the experiment's own post-condition assertions; returns one
// message per violated assertion, empty when the table passes.
std::vector<std::string> self_check(const ExperimentTable& table);

// Reconstructs the exact call from the table's meta block and re-runs it.
// The result matches the input cell-for-cell (bitwise) by construction.
ExperimentTable rerun_from_meta(const ExperimentTable& table);

}  // namespace unimetric
