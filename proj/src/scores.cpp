#include "bcl/scores.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bcl/divergence.hpp"

namespace bcl {

double score_g(const PmfList& pmfs, std::span<const double> w, const Hypothesis& sigma) {
  Pmf scratch;
  double acc = 0.0;
  for (const auto& cluster : sigma.clusters) {
    acc += cluster_g(pmfs, w, cluster, scratch);
  }
  return acc;
}

ScoreBoard score_all(const PmfList& pmfs, std::span<const double> w,
                     const ClusteringProblem& problem) {
  ScoreBoard board;
  board.scores.reserve(problem.hypotheses.size());
  Pmf scratch;
  board.best_value = std::numeric_limits<double>::infinity();
  board.second_value = std::numeric_limits<double>::infinity();
  for (int s = 0; s < problem.num_hypotheses(); ++s) {
    double acc = 0.0;
    for (const auto& cluster : problem.hyp(s).clusters) {
      acc += cluster_g(pmfs, w, cluster, scratch);
    }
    board.scores.push_back(acc);
    if (acc < board.best_value) {
      board.second_value = board.best_value;
      board.second = board.best;
      board.best_value = acc;
      board.best = s;
    } else if (acc < board.second_value) {
      board.second_value = acc;
      board.second = s;
    }
  }
  return board;
}

ScoreMin score_G(const PmfList& pmfs, std::span<const double> w, int sigma,
                 const ClusteringProblem& problem) {
  if (problem.num_hypotheses() < 2) {
    throw std::invalid_argument("score_G: needs at least two hypotheses");
  }
  const ScoreBoard board = score_all(pmfs, w, problem);
  if (board.best != sigma) return {board.best_value, board.best};
  return {board.second_value, board.second};
}

std::vector<double> grad_g(const PmfList& pmfs, std::span<const double> w,
                           const Hypothesis& sigma) {
  std::vector<double> grad(w.size(), 0.0);
  Pmf w_mix;
  for (const auto& cluster : sigma.clusters) {
    // Cluster mixture at the current weights (zero-weight members dropped).
    w_mix.assign(pmfs.front().size(), 0.0);
    double total = 0.0;
    for (int i : cluster) {
      const double wi = w[static_cast<std::size_t>(i)];
      if (wi > 0.0) {
        total += wi;
        const Pmf& pi = pmfs[static_cast<std::size_t>(i)];
        for (std::size_t a = 0; a < w_mix.size(); ++a) w_mix[a] += wi * pi[a];
      }
    }
    if (!(total > 0.0)) {
      throw std::invalid_argument("grad_g: cluster with all-zero weights");
    }
    for (double& v : w_mix) v /= total;
    for (int i : cluster) {
      grad[static_cast<std::size_t>(i)] = kl(pmfs[static_cast<std::size_t>(i)], w_mix);
    }
  }
  return grad;
}

int best_estimate(const PmfList& pmfs, std::span<const double> w,
                  const ClusteringProblem& problem) {
  return score_all(pmfs, w, problem).best;
}

ZStatistic z_statistic(long long t, const PmfList& pmfs, std::span<const double> w,
                       const ClusteringProblem& problem) {
  if (t < 1) {
    throw std::invalid_argument("z_statistic: t must be >= 1");
  }
  if (problem.num_hypotheses() < 2) {
    throw std::invalid_argument("z_statistic: needs at least two hypotheses");
  }
  const ScoreBoard board = score_all(pmfs, w, problem);
  return {static_cast<double>(t) * board.second_value, board.best};
}

LipschitzConstants lipschitz_constants(const ProblemInstance& P,
                                       const ClusteringProblem& problem, int sigma) {
  const double p_min = P.p_min();
  if (!(p_min > 0.0)) {
    throw std::invalid_argument("lipschitz_constants: instance must be strictly positive");
  }
  LipschitzConstants out;
  // Largest within-cluster KL over the alternatives to sigma.
  for (int s = 0; s < problem.num_hypotheses(); ++s) {
    if (s == sigma) continue;
    for (const auto& cluster : problem.hyp(s).clusters) {
      for (int i : cluster) {
        for (int j : cluster) {
          if (i == j) continue;
          out.score_in_w =
              std::max(out.score_in_w, kl(P.arm(i).probs(), P.arm(j).probs()));
        }
      }
    }
  }
  int max_cluster_size = 0;
  for (const auto& h : problem.hypotheses) {
    for (const auto& cluster : h.clusters) {
      max_cluster_size = std::max(max_cluster_size, static_cast<int>(cluster.size()));
    }
  }
  const double alphabet = static_cast<double>(problem.alphabet_size);
  out.grad_scale = max_cluster_size * alphabet * (1.0 - p_min) / (4.0 * p_min);
  out.score_in_p = alphabet * std::log((2.0 - p_min) / p_min);
  return out;
}

}  // namespace bcl
