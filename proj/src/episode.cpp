#include "bcl/episode.hpp"

#include <chrono>
#include <stdexcept>

#include "bcl/policy.hpp"
#include "bcl/stopping.hpp"

namespace bcl {

const char* algo_name(Algo a) {
  switch (a) {
    case Algo::tas_fw: return "tas-fw";
    case Algo::uniform: return "uniform";
  }
  return "?";
}

std::optional<Algo> algo_from_name(std::string_view name) {
  if (name == "tas-fw") return Algo::tas_fw;
  if (name == "uniform") return Algo::uniform;
  return std::nullopt;
}

int pull(const ProblemInstance& P, int arm, SplitMix64& rng) {
  if (arm < 0 || arm >= P.num_arms()) {
    throw std::out_of_range("pull: arm out of range");
  }
  const Pmf& p = P.arm(arm).probs();
  const double u = rng.uniform01();
  double cum = 0.0;
  for (std::size_t a = 0; a + 1 < p.size(); ++a) {
    cum += p[a];
    if (u < cum) return static_cast<int>(a);
  }
  return static_cast<int>(p.size()) - 1;  // absorbs rounding residue
}

namespace {
// Substream tags; arm outcomes and policy randomness never share a stream.
constexpr std::uint64_t kArmNoiseTag = 0;
constexpr std::uint64_t kPolicyTag = 1;
}  // namespace

EpisodeResult run_episode(const ClusteringProblem& problem, const ProblemInstance& P,
                          Algo algo, double delta, std::uint64_t seed,
                          long long cap, const StepObserver& observer) {
  const int K = problem.num_arms;
  if (cap < K) {
    throw std::invalid_argument("run_episode: cap must be >= K");
  }
  const int truth = instance_hypothesis(P, problem);  // throws when not resolvable
  const ThresholdParams params = threshold_params(problem, delta);

  SplitMix64 arm_rng(substream(seed, kArmNoiseTag));
  SplitMix64 policy_rng(substream(seed, kPolicyTag));

  const auto start = std::chrono::steady_clock::now();
  AlgorithmState state;
  state.init(K, problem.alphabet_size);

  EpisodeResult result;
  result.seed = seed;
  result.delta = delta;
  result.algo = algo;

  bool stopped = false;
  while (state.t < cap) {
    const int arm = (algo == Algo::tas_fw) ? policy_step_tasfw(state, problem)
                                           : policy_step_uniform(state, policy_rng);
    const int symbol = pull(P, arm, arm_rng);
    state.record(arm, symbol);
    state.refresh_estimate(problem);
    const double beta = threshold(state.t, params);
    if (observer) observer(state, beta);
    // The tracking policy evaluates the rule once every arm has been seen;
    // the baseline tests from the first step.
    const bool rule_active = (algo == Algo::uniform) || state.t >= K;
    if (rule_active && should_stop(state.z_value, beta)) {
      stopped = true;
      break;
    }
  }

  result.tau = state.t;
  result.recommended = state.sigma_hat;
  result.correct = (state.sigma_hat == truth);
  result.capped = !stopped;
  result.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace bcl
