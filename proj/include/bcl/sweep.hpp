#pragma once
#include <string>
#include <vector>

#include "bcl/episode.hpp"
#include "bcl/io.hpp"
#include "bcl/oracle.hpp"

namespace bcl {

// A delta sweep: for each (delta, algo) cell, `trials` independent episodes
// with seeds seed_base + i. The same seed set is reused across cells so the
// comparison is paired.
struct SweepConfig {
  ProblemSpec problem;
  ProblemInstance instance;
  std::vector<double> delta_grid;  // in (0, 0.5), strictly decreasing
  int trials = 100;
  std::vector<Algo> algos;
  std::uint64_t seed_base = 1;
  long long cap = 10000000;
  std::string out_dir = "out";
};

// Reads and validates a config file. The instance may be inline ("instance")
// or a path ("instance_file", resolved against the config's directory). The
// environment variable BC_SEED, when set, overrides seed_base.
SweepConfig parse_config(const std::string& path);
SweepConfig parse_config_json(const nlohmann::json& j, const std::string& base_dir);

struct SweepRow {
  double delta = 0.0;
  Algo algo = Algo::tas_fw;
  int n_trials = 0;
  double mean_tau = 0.0;
  double std_tau = 0.0;    // sample std; 0 by convention for a single trial
  double error_rate = 0.0;
  double d_bernoulli = 0.0;  // binary_kl(delta, 1 - delta)
  double lower_bound = 0.0;  // d_bernoulli / t_star
};

struct SweepOutput {
  std::vector<SweepRow> rows;          // ordered by (delta grid, algo, )
  std::vector<EpisodeResult> episodes; // ordered by (delta grid, algo, seed)
  OracleResult oracle;                 // hardness run once per sweep
  bool has_capped = false;
  bool error_exceeds_delta = false;
};

// threads <= 0 picks the hardware concurrency. Results are merged in
// canonical order, so output is independent of scheduling.
SweepOutput run_sweep(const SweepConfig& config, int threads = 0);

struct Regression {
  double slope = 0.0;
  double intercept = 0.0;
};

// Ordinary least squares of mean_tau against d_bernoulli over the given rows
// (callers pass one algorithm's rows). Needs >= 2 distinct delta values.
Regression regress_slope(const std::vector<SweepRow>& rows);

// Writes <dir>/summary.csv and <dir>/episodes.csv. LF line endings, floats
// with 12 significant digits, RFC-4180 quoting where a field needs it.
void export_csv(const std::vector<SweepRow>& rows,
                const std::vector<EpisodeResult>& episodes, const std::string& dir);

std::vector<SweepRow> read_summary_csv(const std::string& path);
std::vector<EpisodeResult> read_episodes_csv(const std::string& path);

struct DiagnosticsReport {
  double p_min = 0.0;
  int num_hypotheses = 0;
  int k_tilde = 0;
  int m_max = 0;
  LipschitzConstants constants;
  OracleResult oracle;
  double grad_check_max_rel_err = 0.0;
};

// Instance constants, the hardness value with its allocation, and a
// finite-difference spot check of the score gradients.
DiagnosticsReport diagnostics(const SweepConfig& config);

}  // namespace bcl
