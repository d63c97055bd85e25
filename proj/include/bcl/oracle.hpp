#pragma once
#include <span>
#include <vector>

#include "bcl/game.hpp"
#include "bcl/scores.hpp"

namespace bcl {

struct SubgradientEntry {
  int hypothesis = -1;
  std::vector<double> grad;
};

// All alternatives sigma' != sigma whose score at x is within r of the
// minimum alternative score, paired with their gradients. Nonempty: the
// argmin always qualifies. Requires r > 0 and x positive on clustered arms.
std::vector<SubgradientEntry> subdiff_subspace(const PmfList& pmfs,
                                               std::span<const double> x, double r,
                                               int sigma,
                                               const ClusteringProblem& problem);

// One Frank-Wolfe maximin step: builds the payoff matrix over the
// r-subdifferential subspace at x and solves the matrix game. The returned
// value is max_z min_h <z - x, h>, the step's optimality gap surrogate.
GameSolution fws_step(const PmfList& pmfs, std::span<const double> x, double r,
                      int sigma, const ClusteringProblem& problem);

struct OracleOptions {
  long long max_iters = 200000;
  double gap_tol = 1e-6;
  // Gradients need interior points; iterate entries below this floor are
  // clamped up and renormalized for the gradient evaluation only.
  double interior_floor = 1e-12;
};

struct OracleResult {
  std::vector<double> w_star;   // best allocation found, on the simplex
  double t_star = 0.0;          // its score: the hardness value
  long long iterations = 0;
  double gap = 0.0;             // final Frank-Wolfe gap
  long long clamp_events = 0;   // times the interior safeguard fired
  int sigma = -1;               // ground-truth hypothesis index
};

// Offline hardness oracle: deterministic Frank-Wolfe iterations on the true
// instance (no sampling noise, no forced exploration), r_t = t^(-4/5),
// best-iterate reporting. Stops at max_iters or when the gap drops below
// gap_tol. Requires a strictly positive instance that conforms to exactly one
// hypothesis.
OracleResult solve_oracle(const ProblemInstance& P, const ClusteringProblem& problem,
                          const OracleOptions& opts = {});

// Converse bound on the expected number of pulls of any delta-correct
// algorithm: binary_kl(delta, 1 - delta) / t_star, for delta in (0, 1/2).
double lower_bound(double delta, double t_star);

// The looser log(1 / (2.4 delta)) / t_star form.
double lower_bound_loose(double delta, double t_star);

}  // namespace bcl
