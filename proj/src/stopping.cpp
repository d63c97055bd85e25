#include "bcl/stopping.hpp"

#include <cmath>
#include <stdexcept>

namespace bcl {

namespace {
// pi^2/6 - 1 = sum_{t>=2} 1/t^2, the tail mass absorbed by the threshold.
constexpr double kPiSqOver6Minus1 = 0.6449340668482264365;
}  // namespace

int k_tilde(const ClusteringProblem& problem) { return problem.k_tilde; }

ThresholdParams threshold_params(const ClusteringProblem& problem, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("threshold_params: delta must be in (0, 1)");
  }
  ThresholdParams params;
  params.delta = delta;
  // With variable cluster counts (partition-style collections) the largest
  // count over the collection enters the threshold; conservative for the rest.
  params.cluster_count = problem.m_max;
  params.alphabet_size = problem.alphabet_size;
  params.k_tilde = problem.k_tilde;
  return params;
}

double threshold(long long t, const ThresholdParams& params) {
  if (t < 1) {
    throw std::invalid_argument("threshold: t must be >= 1");
  }
  const double growth =
      static_cast<double>(params.cluster_count * params.alphabet_size +
                          params.k_tilde + 2);
  return std::log(1.0 / params.delta) +
         growth * std::log(static_cast<double>(t) + 1.0) +
         std::log(kPiSqOver6Minus1);
}

}  // namespace bcl
