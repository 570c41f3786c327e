// Command-line surface: compute metric reports for embedding CSV files,
// sample synthetic sets, and run the experiment harness.
//
// Exit codes: 0 success, 1 failed self-check assertion, 2 unusable input
// (flags, parse errors, shape problems), 3 zero-norm row.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unimetric/unimetric.hpp"

namespace {

using namespace unimetric;

Dist dist_from_name(const std::string& name) {
  for (const Dist d : {Dist::StandardGaussian, Dist::UniformBox,
                       Dist::GaussianMixture, Dist::UniformSphere}) {
    if (dist_name(d) == name) return d;
  }
  throw std::invalid_argument("unknown distribution " + name);
}

struct MetricsArgs {
  std::string input;
  std::string pairs;
  double t = 2.0;
  double beta = 2.0;
  bool spectrum = false;
};

int run_metrics(const MetricsArgs& args) {
  const EmbeddingSet E = read_embeddings_csv(args.input);
  const MetricConfig cfg{args.t, args.beta};
  const UnitEmbeddingSet U = normalize_rows(E);

  std::string header = "n,m,minus_lu,minus_w2";
  std::string record = std::to_string(E.n()) + ',' + std::to_string(E.m()) +
                       ',' + format_double(-uniformity_lu(U, cfg)) + ',' +
                       format_double(-uniformity_w2(U));
  if (!args.pairs.empty()) {
    const EmbeddingSet Eb = read_embeddings_csv(args.pairs);
    header += ",alignment";
    record += ',' + format_double(alignment(E, Eb, cfg));
  }
  if (args.spectrum) {
    const Eigen::VectorXd lambdas = covariance_spectrum(E);
    for (Eigen::Index i = 0; i < lambdas.size(); ++i) {
      header += ",lambda" + std::to_string(i);
      record += ',' + format_double(lambdas[i]);
    }
  }
  std::cout << header << '\n' << record << '\n';
  return 0;
}

struct SynthArgs {
  CollapseSpec spec;
  std::string output;
};

int run_synth(const SynthArgs& args) {
  const std::string csv = embeddings_to_csv(sample(args.spec));
  if (args.output.empty()) {
    std::cout << csv;
  } else {
    write_text_atomic(args.output, csv);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniformity metrics for learned representations"};
  app.require_subcommand(1);

  MetricsArgs margs;
  CLI::App* metrics_cmd = app.add_subcommand(
      "metrics", "Report minus_lu and minus_w2 for an embedding CSV");
  metrics_cmd->add_option("input", margs.input, "Embedding CSV, one row per instance")
      ->required();
  metrics_cmd->add_option("--t", margs.t, "Kernel temperature")
      ->capture_default_str();
  metrics_cmd->add_option("--beta", margs.beta, "Alignment exponent")
      ->capture_default_str();
  metrics_cmd->add_option("--pairs", margs.pairs,
                          "Second CSV of index-paired rows; adds an alignment column");
  metrics_cmd->add_flag("--spectrum", margs.spectrum,
                        "Append the covariance eigenvalues, descending");

  SynthArgs sargs;
  std::string synth_dist = "gaussian";
  CLI::App* synth_cmd =
      app.add_subcommand("synth", "Sample a seeded synthetic embedding CSV");
  synth_cmd->add_option("--n", sargs.spec.n, "Instances")->required();
  synth_cmd->add_option("--m", sargs.spec.m, "Dimensions")->required();
  synth_cmd->add_option("--eta", sargs.spec.eta, "Fraction of trailing coordinates zeroed")
      ->capture_default_str();
  synth_cmd->add_option("--shift", sargs.spec.shift, "Added to every live coordinate")
      ->capture_default_str();
  synth_cmd
      ->add_option("--dist", synth_dist,
                   "gaussian | uniform-box | mixture | sphere")
      ->capture_default_str();
  synth_cmd->add_option("--seed", sargs.spec.seed, "Stream seed")
      ->capture_default_str();
  synth_cmd
      ->add_option("--components", sargs.spec.mixture_components,
                   "Mixture components")
      ->capture_default_str();
  synth_cmd
      ->add_option("--separation", sargs.spec.mixture_separation,
                   "Distance between adjacent mixture centers")
      ->capture_default_str();
  synth_cmd->add_option("-o,--output", sargs.output,
                        "Output path (stdout when omitted)");

  const std::vector<std::string> experiment_names = {
      "collapse-sweep", "dimension-sweep", "icc",        "fcc",   "fbc",
      "coord-convergence", "dist-compare", "mean-shift", "table1"};
  std::string exp_name;
  std::string exp_output;
  std::vector<double> exp_etas;
  std::vector<long long> exp_ms;
  std::vector<double> exp_ks;
  long long exp_n = 0;
  long long exp_m = 0;
  double exp_eta = 0.0;
  double exp_shift = 0.0;
  std::string exp_dist = "gaussian";
  std::uint64_t exp_seed = kDefaultSeed;
  int exp_steps = 0;
  int exp_bins = 0;
  int exp_reps = 0;
  int exp_trials = 0;

  CLI::App* exp_cmd = app.add_subcommand(
      "experiment", "Run one named experiment, write its CSV, self-check it");
  exp_cmd->add_option("name", exp_name, "Experiment name")
      ->required()
      ->check(CLI::IsMember(experiment_names));
  exp_cmd->add_option("-o,--output", exp_output,
                      "Output path (default <name>.csv)");
  CLI::Option* etas_opt =
      exp_cmd->add_option("--etas", exp_etas, "Collapse fractions");
  CLI::Option* ms_opt = exp_cmd->add_option("--ms", exp_ms, "Dimension grid");
  CLI::Option* ks_opt = exp_cmd->add_option("--ks", exp_ks, "Shift grid");
  CLI::Option* n_opt = exp_cmd->add_option("--n", exp_n, "Instances per cell");
  CLI::Option* m_opt = exp_cmd->add_option("--m", exp_m, "Dimensions");
  CLI::Option* eta_opt =
      exp_cmd->add_option("--eta", exp_eta, "Clone-base collapse fraction");
  CLI::Option* shift_opt =
      exp_cmd->add_option("--shift", exp_shift, "Clone-base shift");
  CLI::Option* dist_opt = exp_cmd->add_option(
      "--dist", exp_dist, "Clone-base distribution");
  exp_cmd->add_option("--seed", exp_seed, "Root seed")->capture_default_str();
  CLI::Option* steps_opt =
      exp_cmd->add_option("--steps", exp_steps, "Clone steps");
  CLI::Option* bins_opt = exp_cmd->add_option("--bins", exp_bins, "Histogram bins");
  CLI::Option* reps_opt = exp_cmd->add_option("--reps", exp_reps, "Repetitions");
  CLI::Option* trials_opt = exp_cmd->add_option("--trials", exp_trials, "Trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*metrics_cmd) return run_metrics(margs);
    if (*synth_cmd) {
      sargs.spec.dist = dist_from_name(synth_dist);
      return run_synth(sargs);
    }

    ExperimentTable table;
    if (exp_name == "collapse-sweep") {
      table = collapse_sweep(etas_opt->count() ? exp_etas : default_etas(),
                             m_opt->count() ? exp_m : 256,
                             n_opt->count() ? exp_n : 50000, exp_seed);
    } else if (exp_name == "dimension-sweep") {
      std::vector<Eigen::Index> ms = default_sweep_ms();
      if (ms_opt->count()) ms.assign(exp_ms.begin(), exp_ms.end());
      table = dimension_sweep(
          ms, etas_opt->count() ? exp_etas : std::vector<double>{0.25, 0.5, 0.75},
          n_opt->count() ? exp_n : 50000, exp_seed);
    } else if (exp_name == "icc" || exp_name == "fcc" || exp_name == "fbc") {
      CollapseSpec base = default_clone_base();
      base.seed = exp_seed;
      if (n_opt->count()) base.n = exp_n;
      if (m_opt->count()) base.m = exp_m;
      if (eta_opt->count()) base.eta = exp_eta;
      if (shift_opt->count()) base.shift = exp_shift;
      if (dist_opt->count()) base.dist = dist_from_name(exp_dist);
      const CloneKind kind = exp_name == "icc"   ? CloneKind::ICC
                             : exp_name == "fcc" ? CloneKind::FCC
                                                 : CloneKind::FBC;
      table = clone_properties(kind, steps_opt->count() ? exp_steps : 4, base);
    } else if (exp_name == "coord-convergence") {
      std::vector<Eigen::Index> ms = default_coord_ms();
      if (ms_opt->count()) ms.assign(exp_ms.begin(), exp_ms.end());
      table = coordinate_convergence(ms, n_opt->count() ? exp_n : 200000,
                                     bins_opt->count() ? exp_bins : 51,
                                     reps_opt->count() ? exp_reps : 10,
                                     exp_seed);
    } else if (exp_name == "dist-compare") {
      table = distribution_comparison(n_opt->count() ? exp_n : 50000,
                                      m_opt->count() ? exp_m : 64, exp_seed);
    } else if (exp_name == "mean-shift") {
      table = mean_shift(
          ks_opt->count() ? exp_ks
                          : std::vector<double>{0, 0.5, 1, 2, 4, 8, 16, 32},
          n_opt->count() ? exp_n : 10000, m_opt->count() ? exp_m : 2, exp_seed);
    } else {
      table = desiderata_matrix(trials_opt->count() ? exp_trials : 100,
                                n_opt->count() ? exp_n : 512,
                                m_opt->count() ? exp_m : 64, exp_seed);
    }

    write_text_atomic(exp_output.empty() ? exp_name + ".csv" : exp_output,
                      table_to_csv(table));
    const std::vector<std::string> violations = self_check(table);
    for (const std::string& v : violations) {
      std::cerr << "self-check: " << v << '\n';
    }
    return violations.empty() ? 0 : 1;
  } catch (const ZeroNormRow& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
