#include "bcl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bcl/divergence.hpp"

namespace bcl {

std::vector<SubgradientEntry> subdiff_subspace(const PmfList& pmfs,
                                               std::span<const double> x, double r,
                                               int sigma,
                                               const ClusteringProblem& problem) {
  if (!(r > 0.0)) {
    throw std::invalid_argument("subdiff_subspace: r must be > 0");
  }
  const ScoreBoard board = score_all(pmfs, x, problem);
  const double floor =
      (board.best == sigma) ? board.second_value : board.best_value;
  std::vector<SubgradientEntry> subspace;
  for (int s = 0; s < problem.num_hypotheses(); ++s) {
    if (s == sigma) continue;
    if (board.scores[static_cast<std::size_t>(s)] < floor + r) {
      subspace.push_back({s, grad_g(pmfs, x, problem.hyp(s))});
    }
  }
  return subspace;
}

GameSolution fws_step(const PmfList& pmfs, std::span<const double> x, double r,
                      int sigma, const ClusteringProblem& problem) {
  const auto subspace = subdiff_subspace(pmfs, x, r, sigma, problem);
  GamePayoff payoff;
  payoff.num_rows = static_cast<int>(x.size());
  payoff.columns.reserve(subspace.size());
  payoff.entries.resize(x.size() * subspace.size());
  for (std::size_t c = 0; c < subspace.size(); ++c) {
    payoff.columns.push_back(subspace[c].hypothesis);
    const auto& grad = subspace[c].grad;
    double x_dot = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) x_dot += x[k] * grad[k];
    for (std::size_t k = 0; k < x.size(); ++k) {
      payoff.entries[k * subspace.size() + c] = grad[k] - x_dot;
    }
  }
  return solve_game(payoff);
}

OracleResult solve_oracle(const ProblemInstance& P, const ClusteringProblem& problem,
                          const OracleOptions& opts) {
  if (!(P.p_min() > 0.0)) {
    throw std::invalid_argument("solve_oracle: instance must be strictly positive");
  }
  const int K = P.num_arms();
  OracleResult result;
  result.sigma = instance_hypothesis(P, problem);

  std::vector<double> x(static_cast<std::size_t>(K), 1.0 / K);
  std::vector<double> x_eval(x);
  result.w_star = x;
  result.t_star = score_G(P.pmfs(), x, result.sigma, problem).value;

  // The schedule r_t keeps the subspace rich enough for the non-smooth
  // updates; it is useless as a stopping certificate (at large r the maximin
  // collapses toward zero long before the iterate is any good). Certified
  // optimality instead comes from the game at a machine-small radius:
  // for every h in H(x, r), T* <= G(x) + max_z min_h <z - x, h> + r.
  constexpr double kCertRadius = 1e-9;
  for (long long t = 1; t <= opts.max_iters; ++t) {
    // Gradients live on the interior; clamp the evaluation point only.
    double low = 1.0;
    for (double v : x) low = std::min(low, v);
    const double* eval_ptr = x.data();
    if (low < opts.interior_floor) {
      ++result.clamp_events;
      x_eval = x;
      double total = 0.0;
      for (double& v : x_eval) {
        v = std::max(v, opts.interior_floor);
        total += v;
      }
      for (double& v : x_eval) v /= total;
      eval_ptr = x_eval.data();
    }
    const std::span<const double> eval(eval_ptr, static_cast<std::size_t>(K));
    const double r_t = std::pow(static_cast<double>(t), -0.8);
    const GameSolution step = fws_step(P.pmfs(), eval, r_t, result.sigma, problem);
    const GameSolution cert = fws_step(P.pmfs(), eval, kCertRadius, result.sigma, problem);
    result.gap = cert.value + kCertRadius;
    const double inv_t = 1.0 / static_cast<double>(t);
    for (int k = 0; k < K; ++k) {
      x[static_cast<std::size_t>(k)] =
          (1.0 - inv_t) * x[static_cast<std::size_t>(k)] +
          inv_t * step.row_mix[static_cast<std::size_t>(k)];
    }
    const double value = score_G(P.pmfs(), x, result.sigma, problem).value;
    if (value > result.t_star) {
      result.t_star = value;
      result.w_star = x;
    }
    result.iterations = t;
    if (result.gap <= opts.gap_tol) break;
  }
  // Final certificate: a ladder of radii, keeping the best bound. Wider radii
  // see more confusers and can certify tighter despite the +r slack.
  {
    std::vector<double> x_g(result.w_star);
    double total = 0.0;
    for (double& v : x_g) {
      v = std::max(v, opts.interior_floor);
      total += v;
    }
    for (double& v : x_g) v /= total;
    for (double r : {1e-9, 1e-6, 1e-4, 1e-3, 1e-2, 1e-1}) {
      const GameSolution cert = fws_step(P.pmfs(), x_g, r, result.sigma, problem);
      result.gap = std::min(result.gap, cert.value + r);
    }
  }
  return result;
}

double lower_bound(double delta, double t_star) {
  if (!(delta > 0.0 && delta < 0.5)) {
    throw std::invalid_argument("lower_bound: delta must be in (0, 0.5)");
  }
  if (!(t_star > 0.0)) {
    throw std::invalid_argument("lower_bound: t_star must be > 0");
  }
  return binary_kl(delta, 1.0 - delta) / t_star;
}

double lower_bound_loose(double delta, double t_star) {
  if (!(delta > 0.0 && delta < 0.5)) {
    throw std::invalid_argument("lower_bound_loose: delta must be in (0, 0.5)");
  }
  if (!(t_star > 0.0)) {
    throw std::invalid_argument("lower_bound_loose: t_star must be > 0");
  }
  return std::log(1.0 / (2.4 * delta)) / t_star;
}

}  // namespace bcl
