#pragma once
#include <utility>
#include <vector>

#include "bcl/categorical.hpp"

namespace bcl {

// A partition of a subset of the arms into clusters (each of size >= 2) plus
// the derived unconstrained group. Canonical form: members ascending within a
// cluster, clusters ordered by smallest member. The cluster list may be empty
// (every arm unconstrained).
struct Hypothesis {
  int num_arms = 0;
  std::vector<std::vector<int>> clusters;
  std::vector<int> unconstrained;

  int cluster_count() const { return static_cast<int>(clusters.size()); }
  int clustered_arms() const;
};

bool operator==(const Hypothesis& a, const Hypothesis& b);
// Canonical total order: lexicographic on the canonicalized cluster lists.
// Used for deterministic tie-breaking everywhere.
bool hypothesis_less(const Hypothesis& a, const Hypothesis& b);

// Canonicalizes and validates. Throws on overlapping clusters, clusters of
// size < 2, or indices outside [0, K).
Hypothesis make_hypothesis(std::vector<std::vector<int>> clusters, int K);

// True iff every cluster of a is a subset of some cluster of b. Requires both
// hypotheses on the same arm count.
bool dominates(const Hypothesis& a, const Hypothesis& b);

struct DominanceReport {
  std::vector<std::pair<int, int>> violations;  // (dominating, dominated) index pairs
  bool ok() const { return violations.empty(); }
};

// Lists all ordered pairs (a, b), a != b, where hypothesis a dominates b.
DominanceReport validate_assumption1(const std::vector<Hypothesis>& hyps);

// The hypothesis collection for one task instance. Hypotheses are stored in
// canonical order, so list index doubles as the deterministic tie-break rank.
struct ClusteringProblem {
  int num_arms = 0;
  int alphabet_size = 0;
  std::vector<Hypothesis> hypotheses;
  int m_max = 0;    // max cluster count over hypotheses
  int k_tilde = 0;  // max clustered-arm count over hypotheses

  int num_hypotheses() const { return static_cast<int>(hypotheses.size()); }
  const Hypothesis& hyp(int i) const { return hypotheses[static_cast<std::size_t>(i)]; }
};

// Sorts canonically, rejects duplicates and dominance violations, computes
// m_max and k_tilde.
ClusteringProblem make_clustering_problem(int K, int alphabet_size,
                                          std::vector<Hypothesis> hyps);

// Index of the unique hypothesis the instance conforms to: within-cluster
// arms equal within tol (l-infinity) and every pair of arms from distinct
// groups (cluster/cluster, cluster/unconstrained) more than tol apart.
// Throws when no hypothesis matches or more than one does.
int instance_hypothesis(const ProblemInstance& P, const ClusteringProblem& problem,
                        double tol = 1e-9);

// One hypothesis per injective map of the M nominal arms [0, M) into the
// candidate arms [M, K); each hypothesis has M clusters of size 2.
// |C| = (K-M)!/(K-2M)!. Requires K >= 2M >= 2.
ClusteringProblem gen_matching_pairs(int K, int M, int alphabet_size);

// K hypotheses; hypothesis k clusters all arms but k. Requires K >= 3.
ClusteringProblem gen_odd_arm(int K, int alphabet_size);

// One hypothesis per set partition of [0, K) into exactly N nonempty blocks;
// blocks of size >= 2 become clusters, singletons form the unconstrained
// group. |C| = S(K, N), the Stirling number of the second kind.
ClusteringProblem gen_nary_partition(int K, int N, int alphabet_size);

}  // namespace bcl
