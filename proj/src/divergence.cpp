#include "bcl/divergence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bcl {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double kl(const Pmf& p, const Pmf& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("kl: alphabet mismatch");
  }
  double acc = 0.0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (p[a] > 0.0) {
      if (q[a] <= 0.0) return kInf;
      acc += p[a] * std::log(p[a] / q[a]);
    }
    // p[a] == 0 contributes 0 regardless of q[a]
  }
  return acc;
}

double binary_kl(double p, double q) {
  double acc = 0.0;
  if (p > 0.0) {
    if (q <= 0.0) return kInf;
    acc += p * std::log(p / q);
  }
  const double pc = 1.0 - p;
  const double qc = 1.0 - q;
  if (pc > 0.0) {
    if (qc <= 0.0) return kInf;
    acc += pc * std::log(pc / qc);
  }
  return acc;
}

double entropy(const Pmf& p) {
  double acc = 0.0;
  for (double v : p) {
    if (v > 0.0) acc -= v * std::log(v);
  }
  return acc;
}

Pmf mixture(const PmfList& ps, std::span<const double> ws) {
  if (ps.size() != ws.size()) {
    throw std::invalid_argument("mixture: length mismatch");
  }
  if (ps.empty()) {
    throw std::invalid_argument("mixture: empty family");
  }
  Pmf out(ps.front().size(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ws[i] > 0.0) {
      total += ws[i];
      for (std::size_t a = 0; a < out.size(); ++a) out[a] += ws[i] * ps[i][a];
    }
  }
  if (!(total > 0.0)) {
    throw std::invalid_argument("mixture: all weights are zero");
  }
  for (double& v : out) v /= total;
  return out;
}

double g_fn(const PmfList& ps, std::span<const double> ws) {
  if (ps.size() != ws.size()) {
    throw std::invalid_argument("g_fn: length mismatch");
  }
  bool any = false;
  for (double v : ws) {
    if (v > 0.0) { any = true; break; }
  }
  if (!any) return 0.0;
  const Pmf w_mix = mixture(ps, ws);
  double acc = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ws[i] > 0.0) acc += ws[i] * kl(ps[i], w_mix);
  }
  return acc;
}

double cluster_g(const PmfList& pmfs, std::span<const double> w,
                 const std::vector<int>& members, Pmf& scratch) {
  const std::size_t alphabet = pmfs.front().size();
  scratch.assign(alphabet, 0.0);
  double total = 0.0;
  for (int i : members) {
    const double wi = w[static_cast<std::size_t>(i)];
    if (wi > 0.0) {
      total += wi;
      const Pmf& pi = pmfs[static_cast<std::size_t>(i)];
      for (std::size_t a = 0; a < alphabet; ++a) scratch[a] += wi * pi[a];
    }
  }
  if (!(total > 0.0)) return 0.0;
  for (double& v : scratch) v /= total;
  double acc = 0.0;
  for (int i : members) {
    const double wi = w[static_cast<std::size_t>(i)];
    if (wi > 0.0) acc += wi * kl(pmfs[static_cast<std::size_t>(i)], scratch);
  }
  return acc;
}

double gllr_numerator(const std::vector<std::vector<long long>>& counts) {
  if (counts.size() < 2) {
    throw std::invalid_argument("gllr_numerator: need at least 2 sequences");
  }
  const std::size_t alphabet = counts.front().size();
  std::vector<double> pooled(alphabet, 0.0);
  double total = 0.0;
  double per_sequence = 0.0;  // sum_i n_i H(hat P_i)
  for (const auto& c : counts) {
    if (c.size() != alphabet) {
      throw std::invalid_argument("gllr_numerator: alphabet mismatch");
    }
    long long n = 0;
    for (long long v : c) n += v;
    if (n <= 0) {
      throw std::invalid_argument("gllr_numerator: empty sequence");
    }
    Pmf hat(alphabet);
    for (std::size_t a = 0; a < alphabet; ++a) {
      hat[a] = static_cast<double>(c[a]) / static_cast<double>(n);
      pooled[a] += static_cast<double>(c[a]);
    }
    per_sequence += static_cast<double>(n) * entropy(hat);
    total += static_cast<double>(n);
  }
  for (double& v : pooled) v /= total;
  return entropy(pooled) - per_sequence / total;
}

}  // namespace bcl
