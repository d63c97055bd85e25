#include "bcl/io.hpp"

#include <fstream>
#include <stdexcept>

namespace bcl {

using nlohmann::json;

ProblemInstance instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("alphabet_size") || !j.contains("arms")) {
    throw std::invalid_argument("instance: expected {\"alphabet_size\", \"arms\"}");
  }
  const int alphabet = j.at("alphabet_size").get<int>();
  std::vector<Categorical> arms;
  for (const auto& row : j.at("arms")) {
    Pmf p = row.get<Pmf>();
    if (static_cast<int>(p.size()) != alphabet) {
      throw std::invalid_argument("instance: arm pmf length differs from alphabet_size");
    }
    arms.emplace_back(std::move(p));
  }
  return ProblemInstance(std::move(arms));
}

json instance_to_json(const ProblemInstance& P) {
  json arms = json::array();
  for (const auto& a : P.arms()) arms.push_back(a.probs());
  return json{{"alphabet_size", P.alphabet_size()}, {"arms", arms}};
}

ProblemInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open instance file: " + path);
  }
  json j;
  in >> j;
  return instance_from_json(j);
}

ProblemSpec problem_spec_from_json(const json& j) {
  ProblemSpec spec;
  spec.kind = j.at("kind").get<std::string>();
  spec.num_arms = j.at("K").get<int>();
  if (spec.kind == "matching-pairs") {
    spec.group_param = j.at("M").get<int>();
  } else if (spec.kind == "nary") {
    spec.group_param = j.at("N").get<int>();
  } else if (spec.kind == "odd-arm") {
    spec.group_param = 0;
  } else {
    throw std::invalid_argument("problem: unknown kind \"" + spec.kind + "\"");
  }
  return spec;
}

json problem_spec_to_json(const ProblemSpec& spec) {
  json j{{"kind", spec.kind}, {"K", spec.num_arms}};
  if (spec.kind == "matching-pairs") j["M"] = spec.group_param;
  if (spec.kind == "nary") j["N"] = spec.group_param;
  return j;
}

ClusteringProblem build_problem(const ProblemSpec& spec, int alphabet_size) {
  if (spec.kind == "matching-pairs") {
    return gen_matching_pairs(spec.num_arms, spec.group_param, alphabet_size);
  }
  if (spec.kind == "odd-arm") {
    return gen_odd_arm(spec.num_arms, alphabet_size);
  }
  if (spec.kind == "nary") {
    return gen_nary_partition(spec.num_arms, spec.group_param, alphabet_size);
  }
  throw std::invalid_argument("build_problem: unknown kind \"" + spec.kind + "\"");
}

}  // namespace bcl
