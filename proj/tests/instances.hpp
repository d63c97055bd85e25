#pragma once
// Reference instances used across the test suites, with the hardness values
// they are expected to reproduce.

#include <string>
#include <vector>

#include "bcl/hypothesis.hpp"
#include "bcl/io.hpp"

namespace refs {

struct Reference {
  std::string name;
  bcl::ProblemSpec spec;
  bcl::ProblemInstance instance;
  double inv_t_star;  // published hardness 1/T*
};

inline bcl::ProblemInstance make_instance(std::vector<std::vector<double>> rows) {
  std::vector<bcl::Categorical> arms;
  arms.reserve(rows.size());
  for (auto& r : rows) arms.emplace_back(std::move(r));
  return bcl::ProblemInstance(std::move(arms));
}

// Matching pairs, K=6, M=2, |X|=3: arms 0/2 and 1/3 matched.
inline Reference matching_pairs_x3() {
  return {"matching-pairs-x3",
          {"matching-pairs", 6, 2},
          make_instance({{0.1, 0.1, 0.8},
                         {0.4, 0.4, 0.2},
                         {0.1, 0.1, 0.8},
                         {0.4, 0.4, 0.2},
                         {0.5, 0.05, 0.45},
                         {0.1, 0.8, 0.1}}),
          22.61};
}

// Matching pairs, K=6, M=2, |X|=5.
inline Reference matching_pairs_x5() {
  return {"matching-pairs-x5",
          {"matching-pairs", 6, 2},
          make_instance({{0.1, 0.1, 0.6, 0.1, 0.1},
                         {0.2, 0.2, 0.2, 0.2, 0.2},
                         {0.1, 0.1, 0.6, 0.1, 0.1},
                         {0.2, 0.2, 0.2, 0.2, 0.2},
                         {0.4, 0.05, 0.1, 0.05, 0.4},
                         {0.1, 0.6, 0.1, 0.1, 0.1}}),
          22.74};
}

// Odd arm identification, K=7, |X|=3: arm 6 is the odd one.
inline Reference odd_arm() {
  return {"odd-arm",
          {"odd-arm", 7, 0},
          make_instance({{0.1, 0.1, 0.8},
                         {0.1, 0.1, 0.8},
                         {0.1, 0.1, 0.8},
                         {0.1, 0.1, 0.8},
                         {0.1, 0.1, 0.8},
                         {0.1, 0.1, 0.8},
                         {0.6, 0.2, 0.2}}),
          5.37};
}

// 3-ary clustering of K=6 arms, |X|=3: pairs (0,1), (2,3), (4,5).
inline Reference nary() {
  return {"nary",
          {"nary", 6, 3},
          make_instance({{0.6, 0.2, 0.2},
                         {0.6, 0.2, 0.2},
                         {0.25, 0.7, 0.05},
                         {0.25, 0.7, 0.05},
                         {0.05, 0.05, 0.90},
                         {0.05, 0.05, 0.90}}),
          13.42};
}

inline std::vector<Reference> all() {
  return {matching_pairs_x3(), matching_pairs_x5(), odd_arm(), nary()};
}

inline bcl::ClusteringProblem problem_of(const Reference& ref) {
  return bcl::build_problem(ref.spec, ref.instance.alphabet_size());
}

}  // namespace refs
