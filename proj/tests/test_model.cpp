#include <algorithm>
#include <vector>

#include <doctest.h>

#include "bcl/hypothesis.hpp"
#include "bcl/rng.hpp"
#include "instances.hpp"

using namespace bcl;

namespace {

// Independent count oracles.
long long falling_factorial_count(int K, int M) {
  long long n = 1;  // (K-M)! / (K-2M)!
  for (int v = K - M; v > K - 2 * M; --v) n *= v;
  return n;
}

long long stirling2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0) return 0;
  std::vector<std::vector<long long>> s(static_cast<std::size_t>(n + 1),
                                        std::vector<long long>(static_cast<std::size_t>(k + 1), 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= std::min(i, k); ++j) {
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<long long>(j) * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
          s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }
  }
  return s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace

TEST_CASE("make_hypothesis canonicalizes and derives the unconstrained group") {
  const Hypothesis h = make_hypothesis({{2, 0}, {3, 1}}, 6);
  CHECK(h.clusters == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  CHECK(h.unconstrained == std::vector<int>{4, 5});

  const Hypothesis odd = make_hypothesis({{0, 1, 2, 3, 4, 5}}, 7);
  CHECK(odd.unconstrained == std::vector<int>{6});

  const Hypothesis full = make_hypothesis({{0, 1}}, 2);
  CHECK(full.unconstrained.empty());

  // Idempotent and input-order insensitive.
  const Hypothesis again = make_hypothesis(h.clusters, 6);
  CHECK(again == h);
  const Hypothesis shuffled = make_hypothesis({{3, 1}, {0, 2}}, 6);
  CHECK(shuffled == h);

  CHECK_THROWS(make_hypothesis({{0, 1}, {1, 2}}, 4));   // overlap
  CHECK_THROWS(make_hypothesis({{0}}, 4));              // singleton cluster
  CHECK_THROWS(make_hypothesis({{0, 7}}, 4));           // index out of range
  CHECK_THROWS(make_hypothesis({{0, 1}}, 1));           // K too small
}

TEST_CASE("dominates") {
  const Hypothesis a = make_hypothesis({{1, 2}, {4, 5}}, 6);
  const Hypothesis b = make_hypothesis({{1, 2, 3}, {4, 5}}, 6);
  CHECK(dominates(a, b));
  CHECK_FALSE(dominates(b, a));
  CHECK(dominates(a, a));
  const Hypothesis c = make_hypothesis({{1, 2, 3}}, 6);
  const Hypothesis d = make_hypothesis({{1, 2}, {3, 4}}, 6);
  CHECK_FALSE(dominates(c, d));
  CHECK_THROWS(dominates(a, make_hypothesis({{1, 2}}, 7)));
}

TEST_CASE("validate_assumption1") {
  const auto ok = validate_assumption1(gen_odd_arm(7, 3).hypotheses);
  CHECK(ok.ok());

  std::vector<Hypothesis> bad{make_hypothesis({{1, 2}, {4, 5}}, 6),
                              make_hypothesis({{1, 2, 3}, {4, 5}}, 6)};
  const auto report = validate_assumption1(bad);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK_THROWS(make_clustering_problem(6, 3, bad));

  const auto single = validate_assumption1({make_hypothesis({{0, 1}}, 2)});
  CHECK(single.ok());
}

TEST_CASE("generator counts match the combinatorial identities") {
  CHECK(gen_matching_pairs(6, 2, 3).num_hypotheses() == 12);
  CHECK(gen_matching_pairs(2, 1, 2).num_hypotheses() == 1);
  CHECK(gen_matching_pairs(12, 5, 2).num_hypotheses() == 2520);
  CHECK_THROWS(gen_matching_pairs(3, 2, 2));

  for (int K = 2; K <= 10; ++K) {
    for (int M = 1; 2 * M <= K; ++M) {
      CHECK(gen_matching_pairs(K, M, 2).num_hypotheses() == falling_factorial_count(K, M));
    }
  }

  CHECK(gen_odd_arm(7, 3).num_hypotheses() == 7);
  CHECK(gen_odd_arm(3, 2).num_hypotheses() == 3);
  CHECK_THROWS(gen_odd_arm(2, 2));

  CHECK(gen_nary_partition(6, 3, 3).num_hypotheses() == 90);
  CHECK(gen_nary_partition(6, 2, 3).num_hypotheses() == 31);  // 2^(K-1) - 1
  CHECK(gen_nary_partition(8, 3, 3).num_hypotheses() == 966);
  CHECK_THROWS(gen_nary_partition(6, 1, 3));
  CHECK_THROWS(gen_nary_partition(6, 7, 3));

  for (int K = 2; K <= 10; ++K) {
    for (int N = 2; N <= K; ++N) {
      CHECK(gen_nary_partition(K, N, 2).num_hypotheses() == stirling2(K, N));
    }
  }
  for (int K = 2; K <= 10; ++K) {
    CHECK(gen_nary_partition(K, 2, 2).num_hypotheses() == (1LL << (K - 1)) - 1);
  }
}

TEST_CASE("gen_odd_arm structure") {
  const auto problem = gen_odd_arm(4, 2);
  bool found = false;
  for (const auto& h : problem.hypotheses) {
    if (h.unconstrained == std::vector<int>{0}) {
      CHECK(h.clusters == std::vector<std::vector<int>>{{1, 2, 3}});
      found = true;
    }
    CHECK(h.clusters.size() == 1);
    CHECK(h.clusters.front().size() == 3);
  }
  CHECK(found);
}

TEST_CASE("generator outputs satisfy the no-dominance assumption") {
  CHECK(validate_assumption1(gen_matching_pairs(8, 3, 2).hypotheses).ok());
  CHECK(validate_assumption1(gen_odd_arm(9, 2).hypotheses).ok());
  CHECK(validate_assumption1(gen_nary_partition(7, 3, 2).hypotheses).ok());
  CHECK(validate_assumption1(gen_nary_partition(6, 4, 2).hypotheses).ok());
}

TEST_CASE("instance_hypothesis on the reference instances") {
  const auto mp = refs::matching_pairs_x3();
  const auto mp_problem = refs::problem_of(mp);
  const int mp_truth = instance_hypothesis(mp.instance, mp_problem);
  CHECK(mp_problem.hyp(mp_truth) == make_hypothesis({{0, 2}, {1, 3}}, 6));

  const auto oa = refs::odd_arm();
  const auto oa_problem = refs::problem_of(oa);
  const int oa_truth = instance_hypothesis(oa.instance, oa_problem);
  CHECK(oa_problem.hyp(oa_truth) == make_hypothesis({{0, 1, 2, 3, 4, 5}}, 7));

  const auto na = refs::nary();
  const auto na_problem = refs::problem_of(na);
  const int na_truth = instance_hypothesis(na.instance, na_problem);
  CHECK(na_problem.hyp(na_truth) == make_hypothesis({{0, 1}, {2, 3}, {4, 5}}, 6));
}

TEST_CASE("instance_hypothesis rejects degenerate instances") {
  const auto problem = gen_odd_arm(3, 2);
  const auto identical = refs::make_instance({{0.4, 0.6}, {0.4, 0.6}, {0.4, 0.6}});
  CHECK_THROWS(instance_hypothesis(identical, problem));
}

TEST_CASE("exactly conforming instances resolve to their own hypothesis") {
  // For every hypothesis of every generated problem, build an instance that
  // conforms to it exactly and check the round trip with tol = 0.
  SplitMix64 rng(23);
  const int alphabet = 3;
  std::vector<ClusteringProblem> problems{gen_matching_pairs(6, 2, alphabet),
                                          gen_odd_arm(5, alphabet),
                                          gen_nary_partition(5, 2, alphabet)};
  // A pool of clearly separated pmfs; group g uses pool[g].
  const PmfList pool{{0.70, 0.15, 0.15}, {0.15, 0.70, 0.15}, {0.15, 0.15, 0.70},
                     {0.45, 0.45, 0.10}, {0.10, 0.45, 0.45}, {0.45, 0.10, 0.45}};
  for (const auto& problem : problems) {
    for (int s = 0; s < problem.num_hypotheses(); ++s) {
      const Hypothesis& h = problem.hyp(s);
      PmfList rows(static_cast<std::size_t>(problem.num_arms));
      int group = 0;
      for (const auto& cluster : h.clusters) {
        for (int i : cluster) rows[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(group)];
        ++group;
      }
      for (int i : h.unconstrained) {
        rows[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(group)];
        ++group;
      }
      std::vector<Categorical> arms;
      for (auto& r : rows) arms.emplace_back(std::move(r));
      const ProblemInstance P{std::move(arms)};
      CHECK(instance_hypothesis(P, problem, 0.0) == s);
    }
  }
}

TEST_CASE("problem invariants") {
  const auto mp = gen_matching_pairs(6, 2, 3);
  CHECK(mp.k_tilde == 4);
  CHECK(mp.m_max == 2);
  const auto oa = gen_odd_arm(7, 3);
  CHECK(oa.k_tilde == 6);
  CHECK(oa.m_max == 1);
  const auto na = gen_nary_partition(6, 3, 3);
  CHECK(na.k_tilde == 6);  // the {2,2,2} partition clusters every arm
  CHECK(na.m_max == 3);
  // Canonical ordering is strict.
  for (int i = 1; i < na.num_hypotheses(); ++i) {
    CHECK(hypothesis_less(na.hyp(i - 1), na.hyp(i)));
  }
}
