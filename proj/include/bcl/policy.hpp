#pragma once
#include <span>
#include <vector>

#include "bcl/hypothesis.hpp"
#include "bcl/rng.hpp"
#include "bcl/scores.hpp"

namespace bcl {

/*
Sampling policy. The tracked target z~(t) is uniform during the first K steps
and at the forced-exploration indices, and the Frank-Wolfe maximin step
otherwise; the arm pulled is chosen by C-tracking against the accumulated
targets. Every arm therefore collects at least order sqrt(t) log t pulls,
which keeps the empirical scores honest.
*/

// Forced-exploration schedule: t is forced iff
// ceil(sqrt(t) ln t) == ceil(sqrt(t+1) ln(t+1)) - 1. Natural log, evaluated
// as written (t = 1 is forced; harmless inside the uniform phase).
bool forced_index(long long t);

// C-tracking pull: the arm whose pull count lags its accumulated target the
// most; lowest index on ties. Keeps |N_i - cum_z_i| <= K - 1 at every step.
int ctrack_next(std::span<const double> cum_z, std::span<const long long> pulls);

// Per-episode mutable state. Empirical pmfs live as integer counts; pmf_hat
// and w are derived views refreshed once per step.
struct AlgorithmState {
  long long t = 0;
  std::vector<long long> pulls;                // N_i(t)
  std::vector<std::vector<long long>> counts;  // K x |X| symbol counts
  std::vector<double> cum_z;                   // sum_s z~_i(s)
  std::vector<double> x_tilde;                 // cum_z / t
  PmfList pmf_hat;                             // unpulled arms read as uniform (weight 0, inert)
  std::vector<double> w;                       // N / t
  int sigma_hat = 0;
  double z_value = 0.0;

  void init(int num_arms, int alphabet_size);
  // Registers one observed symbol; asserts the tracking bound in debug builds.
  void record(int arm, int symbol);
  // Rederives pmf_hat, w, sigma_hat and the stopping statistic from counts.
  void refresh_estimate(const ClusteringProblem& problem);
};

// Advances t, picks the tracked target for the new step, updates cum_z and
// x_tilde, and returns the arm to pull. Uses the state's pmf_hat / x_tilde /
// sigma_hat from the previous step for the Frank-Wolfe update.
int policy_step_tasfw(AlgorithmState& state, const ClusteringProblem& problem);

// Baseline: advances t and draws an arm uniformly at random.
int policy_step_uniform(AlgorithmState& state, SplitMix64& rng);

}  // namespace bcl
