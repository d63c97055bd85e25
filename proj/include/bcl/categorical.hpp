#pragma once
#include <vector>

namespace bcl {

// Plain probability vectors used by the numeric kernels. Validated wrappers
// (Categorical, ProblemInstance) guard the module boundaries; inside the hot
// loops everything is a Pmf.
using Pmf = std::vector<double>;
using PmfList = std::vector<Pmf>;

// A probability mass function on the alphabet [0, size). Entries are
// nonnegative and sum to one within 1e-12; the alphabet has at least two
// symbols.
class Categorical {
 public:
  explicit Categorical(Pmf probs);

  int alphabet_size() const { return static_cast<int>(p_.size()); }
  double operator[](int a) const { return p_[static_cast<std::size_t>(a)]; }
  const Pmf& probs() const { return p_; }

 private:
  Pmf p_;
};

// K arms sharing one alphabet. Arms are 0-indexed everywhere.
class ProblemInstance {
 public:
  ProblemInstance() = default;  // empty sentinel; populated via the ctor below
  explicit ProblemInstance(std::vector<Categorical> arms);

  int num_arms() const { return static_cast<int>(arms_.size()); }
  int alphabet_size() const;
  const Categorical& arm(int i) const { return arms_[static_cast<std::size_t>(i)]; }
  const std::vector<Categorical>& arms() const { return arms_; }
  const PmfList& pmfs() const { return pmfs_; }
  bool empty() const { return arms_.empty(); }

  // Smallest probability over all arms and symbols. Zero is representable;
  // callers that require strict positivity check and throw themselves.
  double p_min() const;

 private:
  std::vector<Categorical> arms_;
  PmfList pmfs_;  // materialized copy of the arm pmfs for kernel calls
};

// Largest absolute coordinate difference between two pmfs.
double linf_distance(const Pmf& p, const Pmf& q);

}  // namespace bcl
