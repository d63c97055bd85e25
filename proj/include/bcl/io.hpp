#pragma once
#include <string>

#include <json.hpp>

#include "bcl/hypothesis.hpp"

namespace bcl {

// Instance JSON: {"alphabet_size": int, "arms": [[p...], ...]}.
ProblemInstance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const ProblemInstance& P);
ProblemInstance load_instance(const std::string& path);

// Problem spec JSON: {"kind": "matching-pairs"|"odd-arm"|"nary", "K": int,
// "M"|"N": int}. Arms are 0-indexed throughout the tool.
struct ProblemSpec {
  std::string kind;
  int num_arms = 0;     // K
  int group_param = 0;  // M for matching-pairs, N for nary; unused for odd-arm
};

ProblemSpec problem_spec_from_json(const nlohmann::json& j);
nlohmann::json problem_spec_to_json(const ProblemSpec& spec);

// Expands a spec into the full hypothesis collection, binding the alphabet
// size of the paired instance.
ClusteringProblem build_problem(const ProblemSpec& spec, int alphabet_size);

}  // namespace bcl
