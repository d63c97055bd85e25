#pragma once
#include "bcl/hypothesis.hpp"

namespace bcl {

// Maximum number of arms any hypothesis places in a cluster.
int k_tilde(const ClusteringProblem& problem);

struct ThresholdParams {
  double delta = 0.0;
  int cluster_count = 0;   // M entering the threshold: max cluster count over C
  int alphabet_size = 0;
  int k_tilde = 0;
};

ThresholdParams threshold_params(const ClusteringProblem& problem, double delta);

// Stopping threshold
//   beta(t, delta) = ln(1/delta) + (M|X| + K~ + 2) ln(t+1) + ln(pi^2/6 - 1).
// Grows like ln t, so the linearly growing statistic always crosses it.
double threshold(long long t, const ThresholdParams& params);

// Stop as soon as the statistic reaches the threshold (inclusive).
inline bool should_stop(double z, double beta) { return z >= beta; }

}  // namespace bcl
