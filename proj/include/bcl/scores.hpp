#pragma once
#include <span>
#include <vector>

#include "bcl/hypothesis.hpp"

namespace bcl {

/*
Hypothesis scores. A hypothesis sigma scores

    g(P, w, sigma) = sum over clusters A of g_fn(P restricted to A, w restricted to A),

which is zero iff P conforms to sigma at the positively weighted arms;
unconstrained arms never contribute. Works for any pmf list, in particular
empirical pmfs that conform to no hypothesis at all.
*/

// All per-hypothesis scores plus the two smallest, ties broken by canonical
// (index) order.
struct ScoreBoard {
  std::vector<double> scores;
  int best = -1;
  int second = -1;
  double best_value = 0.0;
  double second_value = 0.0;
};

double score_g(const PmfList& pmfs, std::span<const double> w, const Hypothesis& sigma);

ScoreBoard score_all(const PmfList& pmfs, std::span<const double> w,
                     const ClusteringProblem& problem);

struct ScoreMin {
  double value = 0.0;
  int argmin = -1;
};

// min over sigma' != sigma of score_g, with the minimizing hypothesis.
// Throws on single-hypothesis problems.
ScoreMin score_G(const PmfList& pmfs, std::span<const double> w, int sigma,
                 const ClusteringProblem& problem);

// Gradient of w -> score_g(P, w, sigma): entry i equals KL(P_i || W_m) for
// arm i in cluster m (W_m the cluster mixture at the current weights), zero
// for unconstrained arms. Weights must be positive somewhere in each cluster;
// zero-weight members follow the mixture convention.
std::vector<double> grad_g(const PmfList& pmfs, std::span<const double> w,
                           const Hypothesis& sigma);

// argmin over the hypothesis collection of score_g; canonical tie-break.
int best_estimate(const PmfList& pmfs, std::span<const double> w,
                  const ClusteringProblem& problem);

struct ZStatistic {
  double value = 0.0;  // t times the second-smallest hypothesis score
  int sigma_hat = -1;
};

ZStatistic z_statistic(long long t, const PmfList& pmfs, std::span<const double> w,
                       const ClusteringProblem& problem);

// Smoothness diagnostics for a positive instance:
//   score_in_w   — Lipschitz constant of the scores in w (largest
//                  within-cluster KL over alternative hypotheses),
//   grad_scale   — gradient Lipschitz scale: the gradient is
//                  (grad_scale / gamma)-Lipschitz on the simplex slice with
//                  entries >= gamma,
//   score_in_p   — Lipschitz constant of the scores in P under l-infinity
//                  perturbations up to p_min / 2.
struct LipschitzConstants {
  double score_in_w = 0.0;
  double grad_scale = 0.0;
  double score_in_p = 0.0;
};

// Requires strictly positive instance entries (p_min > 0).
LipschitzConstants lipschitz_constants(const ProblemInstance& P,
                                       const ClusteringProblem& problem, int sigma);

}  // namespace bcl
