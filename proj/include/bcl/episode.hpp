#pragma once
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "bcl/hypothesis.hpp"
#include "bcl/policy.hpp"
#include "bcl/rng.hpp"

namespace bcl {

enum class Algo { tas_fw, uniform };

const char* algo_name(Algo a);
std::optional<Algo> algo_from_name(std::string_view name);

// One observation: a symbol drawn from the arm's pmf by inverse CDF.
int pull(const ProblemInstance& P, int arm, SplitMix64& rng);

struct EpisodeResult {
  long long tau = 0;        // stopping time in pulls
  int recommended = -1;     // hypothesis index (canonical order)
  bool correct = false;
  std::uint64_t seed = 0;
  double delta = 0.0;
  Algo algo = Algo::tas_fw;
  bool capped = false;      // cap reached before the stop condition fired
  double wall_time = 0.0;   // seconds
};

// Invoked after every state refresh with the state and the current threshold;
// lets tests watch first-passage behavior and pull floors without touching
// the run loop.
using StepObserver = std::function<void(const AlgorithmState&, double beta)>;

// Runs one full episode: initialization (each arm once for the tracking
// policy), then sample / update / test until the stopping rule fires or the
// pull cap is hit. Deterministic given (config, seed). Requires the instance
// to conform to exactly one hypothesis and cap >= K.
EpisodeResult run_episode(const ClusteringProblem& problem, const ProblemInstance& P,
                          Algo algo, double delta, std::uint64_t seed,
                          long long cap = 10000000,
                          const StepObserver& observer = {});

}  // namespace bcl
