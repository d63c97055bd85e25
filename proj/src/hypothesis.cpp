#include "bcl/hypothesis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bcl {

int Hypothesis::clustered_arms() const {
  int n = 0;
  for (const auto& c : clusters) n += static_cast<int>(c.size());
  return n;
}

bool operator==(const Hypothesis& a, const Hypothesis& b) {
  return a.num_arms == b.num_arms && a.clusters == b.clusters;
}

bool hypothesis_less(const Hypothesis& a, const Hypothesis& b) {
  return a.clusters < b.clusters;
}

Hypothesis make_hypothesis(std::vector<std::vector<int>> clusters, int K) {
  if (K < 2) {
    throw std::invalid_argument("make_hypothesis: K must be >= 2");
  }
  std::vector<char> seen(static_cast<std::size_t>(K), 0);
  for (auto& c : clusters) {
    if (c.size() < 2) {
      throw std::invalid_argument("make_hypothesis: cluster of size < 2");
    }
    for (int i : c) {
      if (i < 0 || i >= K) {
        throw std::invalid_argument("make_hypothesis: arm index outside [0, K)");
      }
      if (seen[static_cast<std::size_t>(i)]) {
        throw std::invalid_argument("make_hypothesis: clusters overlap");
      }
      seen[static_cast<std::size_t>(i)] = 1;
    }
    std::sort(c.begin(), c.end());
  }
  std::sort(clusters.begin(), clusters.end());  // disjoint, so "by smallest member"
  Hypothesis h;
  h.num_arms = K;
  h.clusters = std::move(clusters);
  for (int i = 0; i < K; ++i) {
    if (!seen[static_cast<std::size_t>(i)]) h.unconstrained.push_back(i);
  }
  return h;
}

bool dominates(const Hypothesis& a, const Hypothesis& b) {
  if (a.num_arms != b.num_arms) {
    throw std::invalid_argument("dominates: hypotheses on different arm counts");
  }
  for (const auto& ca : a.clusters) {
    bool contained = false;
    for (const auto& cb : b.clusters) {
      if (std::includes(cb.begin(), cb.end(), ca.begin(), ca.end())) {
        contained = true;
        break;
      }
    }
    if (!contained) return false;
  }
  return true;
}

DominanceReport validate_assumption1(const std::vector<Hypothesis>& hyps) {
  DominanceReport report;
  const int n = static_cast<int>(hyps.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& a = hyps[static_cast<std::size_t>(i)];
      const auto& b = hyps[static_cast<std::size_t>(j)];
      if (a == b) continue;
      if (dominates(a, b)) report.violations.emplace_back(i, j);
    }
  }
  return report;
}

namespace {

constexpr std::size_t kAutoValidateLimit = 3000;

int max_clustered_arms(const std::vector<Hypothesis>& hyps) {
  int best = 0;
  for (const auto& h : hyps) best = std::max(best, h.clustered_arms());
  return best;
}

int max_cluster_count(const std::vector<Hypothesis>& hyps) {
  int best = 0;
  for (const auto& h : hyps) best = std::max(best, h.cluster_count());
  return best;
}

}  // namespace

ClusteringProblem make_clustering_problem(int K, int alphabet_size,
                                          std::vector<Hypothesis> hyps) {
  if (hyps.empty()) {
    throw std::invalid_argument("make_clustering_problem: no hypotheses");
  }
  for (const auto& h : hyps) {
    if (h.num_arms != K) {
      throw std::invalid_argument("make_clustering_problem: hypothesis arm count mismatch");
    }
  }
  std::sort(hyps.begin(), hyps.end(), hypothesis_less);
  for (std::size_t i = 1; i < hyps.size(); ++i) {
    if (hyps[i - 1] == hyps[i]) {
      throw std::invalid_argument("make_clustering_problem: duplicate hypotheses");
    }
  }
  // The pairwise dominance scan is quadratic; run it automatically only at
  // sizes a simulation would actually use. Larger collections (combinatorial
  // census runs) can call validate_assumption1 themselves.
  if (hyps.size() <= kAutoValidateLimit) {
    const DominanceReport report = validate_assumption1(hyps);
    if (!report.ok()) {
      std::ostringstream msg;
      msg << "make_clustering_problem: dominance between distinct hypotheses:";
      for (const auto& [i, j] : report.violations) msg << " (" << i << "," << j << ")";
      throw std::invalid_argument(msg.str());
    }
  }
  ClusteringProblem problem;
  problem.num_arms = K;
  problem.alphabet_size = alphabet_size;
  problem.m_max = max_cluster_count(hyps);
  problem.k_tilde = max_clustered_arms(hyps);
  problem.hypotheses = std::move(hyps);
  return problem;
}

namespace {

// Group id per arm under a hypothesis: cluster index, or cluster_count() for
// every unconstrained arm (they share one group).
std::vector<int> group_ids(const Hypothesis& h) {
  std::vector<int> id(static_cast<std::size_t>(h.num_arms), h.cluster_count());
  for (int m = 0; m < h.cluster_count(); ++m) {
    for (int i : h.clusters[static_cast<std::size_t>(m)]) {
      id[static_cast<std::size_t>(i)] = m;
    }
  }
  return id;
}

bool conforms(const ProblemInstance& P, const Hypothesis& h, double tol) {
  const std::vector<int> id = group_ids(h);
  const int K = h.num_arms;
  for (int i = 0; i < K; ++i) {
    for (int j = i + 1; j < K; ++j) {
      const double d = linf_distance(P.arm(i).probs(), P.arm(j).probs());
      const bool same_group = id[static_cast<std::size_t>(i)] == id[static_cast<std::size_t>(j)];
      const bool clustered = id[static_cast<std::size_t>(i)] < h.cluster_count();
      if (same_group && clustered) {
        if (d > tol) return false;      // within-cluster arms must agree
      } else if (!same_group) {
        if (d <= tol) return false;     // cross-group arms must differ
      }
      // two unconstrained arms: no constraint
    }
  }
  return true;
}

}  // namespace

int instance_hypothesis(const ProblemInstance& P, const ClusteringProblem& problem,
                        double tol) {
  if (tol < 0.0) {
    throw std::invalid_argument("instance_hypothesis: tol must be >= 0");
  }
  if (P.num_arms() != problem.num_arms) {
    throw std::invalid_argument("instance_hypothesis: arm count mismatch");
  }
  int found = -1;
  for (int s = 0; s < problem.num_hypotheses(); ++s) {
    if (conforms(P, problem.hyp(s), tol)) {
      if (found >= 0) {
        throw std::runtime_error("instance_hypothesis: more than one hypothesis matches");
      }
      found = s;
    }
  }
  if (found < 0) {
    throw std::runtime_error("instance_hypothesis: no hypothesis matches");
  }
  return found;
}

ClusteringProblem gen_matching_pairs(int K, int M, int alphabet_size) {
  if (M < 1 || K < 2 * M) {
    throw std::invalid_argument("gen_matching_pairs: need K >= 2M >= 2");
  }
  std::vector<Hypothesis> hyps;
  std::vector<int> match(static_cast<std::size_t>(M), -1);
  std::vector<char> used(static_cast<std::size_t>(K), 0);
  // DFS over injective assignments of candidates [M, K) to nominal arms.
  auto rec = [&](auto&& self, int nominal) -> void {
    if (nominal == M) {
      std::vector<std::vector<int>> clusters;
      clusters.reserve(static_cast<std::size_t>(M));
      for (int i = 0; i < M; ++i) {
        clusters.push_back({i, match[static_cast<std::size_t>(i)]});
      }
      hyps.push_back(make_hypothesis(std::move(clusters), K));
      return;
    }
    for (int j = M; j < K; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = 1;
      match[static_cast<std::size_t>(nominal)] = j;
      self(self, nominal + 1);
      used[static_cast<std::size_t>(j)] = 0;
    }
  };
  rec(rec, 0);
  return make_clustering_problem(K, alphabet_size, std::move(hyps));
}

ClusteringProblem gen_odd_arm(int K, int alphabet_size) {
  if (K < 3) {
    throw std::invalid_argument("gen_odd_arm: need K >= 3");
  }
  std::vector<Hypothesis> hyps;
  hyps.reserve(static_cast<std::size_t>(K));
  for (int odd = 0; odd < K; ++odd) {
    std::vector<int> cluster;
    cluster.reserve(static_cast<std::size_t>(K - 1));
    for (int i = 0; i < K; ++i) {
      if (i != odd) cluster.push_back(i);
    }
    hyps.push_back(make_hypothesis({std::move(cluster)}, K));
  }
  return make_clustering_problem(K, alphabet_size, std::move(hyps));
}

ClusteringProblem gen_nary_partition(int K, int N, int alphabet_size) {
  if (N < 2 || N > K) {
    throw std::invalid_argument("gen_nary_partition: need 2 <= N <= K");
  }
  std::vector<Hypothesis> hyps;
  // Restricted growth strings: block[i] <= max(block[0..i-1]) + 1, exactly N
  // blocks in the end.
  std::vector<int> block(static_cast<std::size_t>(K), 0);
  auto rec = [&](auto&& self, int arm, int used_blocks) -> void {
    if (arm == K) {
      if (used_blocks != N) return;
      std::vector<std::vector<int>> groups(static_cast<std::size_t>(N));
      for (int i = 0; i < K; ++i) {
        groups[static_cast<std::size_t>(block[static_cast<std::size_t>(i)])].push_back(i);
      }
      std::vector<std::vector<int>> clusters;
      for (auto& g : groups) {
        if (g.size() >= 2) clusters.push_back(std::move(g));
      }
      hyps.push_back(make_hypothesis(std::move(clusters), K));
      return;
    }
    // Prune: the remaining arms must be able to open enough new blocks.
    if (used_blocks + (K - arm) < N) return;
    const int limit = std::min(used_blocks, N - 1);
    for (int b = 0; b <= limit; ++b) {
      block[static_cast<std::size_t>(arm)] = b;
      self(self, arm + 1, std::max(used_blocks, b + 1));
    }
  };
  block[0] = 0;
  rec(rec, 1, 1);
  return make_clustering_problem(K, alphabet_size, std::move(hyps));
}

}  // namespace bcl
