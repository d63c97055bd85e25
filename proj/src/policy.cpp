#include "bcl/policy.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "bcl/oracle.hpp"

namespace bcl {

bool forced_index(long long t) {
  if (t < 1) {
    throw std::invalid_argument("forced_index: t must be >= 1");
  }
  const auto f = [](long long s) {
    const double sd = static_cast<double>(s);
    return std::ceil(std::sqrt(sd) * std::log(sd));
  };
  return f(t) == f(t + 1) - 1.0;
}

int ctrack_next(std::span<const double> cum_z, std::span<const long long> pulls) {
  int arm = 0;
  double best = cum_z[0] - static_cast<double>(pulls[0]);
  for (std::size_t i = 1; i < cum_z.size(); ++i) {
    const double lag = cum_z[i] - static_cast<double>(pulls[i]);
    if (lag > best) {
      best = lag;
      arm = static_cast<int>(i);
    }
  }
  return arm;
}

void AlgorithmState::init(int num_arms, int alphabet_size) {
  t = 0;
  pulls.assign(static_cast<std::size_t>(num_arms), 0);
  counts.assign(static_cast<std::size_t>(num_arms),
                std::vector<long long>(static_cast<std::size_t>(alphabet_size), 0));
  cum_z.assign(static_cast<std::size_t>(num_arms), 0.0);
  x_tilde.assign(static_cast<std::size_t>(num_arms), 1.0 / num_arms);
  pmf_hat.assign(static_cast<std::size_t>(num_arms),
                 Pmf(static_cast<std::size_t>(alphabet_size), 1.0 / alphabet_size));
  w.assign(static_cast<std::size_t>(num_arms), 0.0);
  sigma_hat = 0;
  z_value = 0.0;
}

void AlgorithmState::record(int arm, int symbol) {
  pulls[static_cast<std::size_t>(arm)] += 1;
  counts[static_cast<std::size_t>(arm)][static_cast<std::size_t>(symbol)] += 1;
#ifndef NDEBUG
  // Tracking bound |N_i - cum_z_i| <= K - 1; only meaningful when targets are
  // being accumulated (the uniform baseline leaves cum_z at zero).
  double cum_total = 0.0;
  for (double v : cum_z) cum_total += v;
  if (std::fabs(cum_total - static_cast<double>(t)) < 0.5) {
    const double slack = static_cast<double>(pulls.size() - 1) + 1e-9;
    for (std::size_t i = 0; i < pulls.size(); ++i) {
      assert(std::fabs(static_cast<double>(pulls[i]) - cum_z[i]) <= slack);
    }
  }
#endif
}

void AlgorithmState::refresh_estimate(const ClusteringProblem& problem) {
  const double td = static_cast<double>(t);
  for (std::size_t i = 0; i < pulls.size(); ++i) {
    w[i] = static_cast<double>(pulls[i]) / td;
    if (pulls[i] > 0) {
      const double n = static_cast<double>(pulls[i]);
      for (std::size_t a = 0; a < pmf_hat[i].size(); ++a) {
        pmf_hat[i][a] = static_cast<double>(counts[i][a]) / n;
      }
    }
    // Unpulled arms keep the uniform placeholder; their weight is zero, so
    // no score ever reads it.
  }
  const ZStatistic stat = z_statistic(t, pmf_hat, w, problem);
  sigma_hat = stat.sigma_hat;
  z_value = stat.value;
}

int policy_step_tasfw(AlgorithmState& state, const ClusteringProblem& problem) {
  const int K = static_cast<int>(state.pulls.size());
  const long long t = state.t + 1;
  if (t <= K || forced_index(t)) {
    const double u = 1.0 / K;
    for (double& v : state.cum_z) v += u;
  } else {
    const double r_t = std::pow(static_cast<double>(t), -0.8);
    const GameSolution step =
        fws_step(state.pmf_hat, state.x_tilde, r_t, state.sigma_hat, problem);
    for (std::size_t i = 0; i < state.cum_z.size(); ++i) {
      state.cum_z[i] += step.row_mix[i];
    }
  }
  state.t = t;
  const double td = static_cast<double>(t);
  for (std::size_t i = 0; i < state.cum_z.size(); ++i) {
    state.x_tilde[i] = state.cum_z[i] / td;
  }
  return ctrack_next(state.cum_z, state.pulls);
}

int policy_step_uniform(AlgorithmState& state, SplitMix64& rng) {
  state.t += 1;
  return rng.uniform_int(static_cast<int>(state.pulls.size()));
}

}  // namespace bcl
