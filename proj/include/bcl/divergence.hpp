#pragma once
#include <span>
#include <vector>

#include "bcl/categorical.hpp"

namespace bcl {

/*
KL-divergence family over finite alphabets, in nats.

The central object is the weighted dispersion of a family of pmfs around its
weighted mixture:

    g(P_1..P_B, w_1..w_B) = sum_i w_i * KL(P_i || W),
    W = (sum_i w_i P_i) / (sum_i w_i),

with g = 0 when every weight is zero. Zero-weight members are dropped from the
mixture, which keeps every KL term finite: wherever P_i has mass and w_i > 0,
W has mass too. The conventions 0*log 0 = 0 and 0*log(0/0) = 0 are implemented
explicitly, never left to floating-point accident.
*/

// KL(p || q). Returns +infinity when p puts mass where q has none.
double kl(const Pmf& p, const Pmf& q);

// KL between Bernoulli(p) and Bernoulli(q). q in {0,1} with mismatched p
// yields +infinity; that is a value, not an error.
double binary_kl(double p, double q);

// Shannon entropy in nats.
double entropy(const Pmf& p);

// Normalized weighted average of the pmfs; members with zero weight are
// ignored. Throws when all weights are zero.
Pmf mixture(const PmfList& ps, std::span<const double> ws);

// The dispersion g described above. Weights need not be normalized; the
// function is positively homogeneous of degree 1 in ws.
double g_fn(const PmfList& ps, std::span<const double> ws);

// Same as g_fn but restricted to the pmfs named by `members`, with weights
// looked up in the full vector `w`. `scratch` avoids reallocation in loops.
double cluster_g(const PmfList& pmfs, std::span<const double> w,
                 const std::vector<int>& members, Pmf& scratch);

// Per-sample log ratio of the per-sequence ML fit to the pooled ML fit,
// computed from empirical pmfs and entropies only: given B >= 2 count
// vectors with totals n_i and N = sum n_i,
//
//   (1/N) * log [ max_{P_1..P_B} prod_i P_i^{n_i}(x_i) / max_P P^N(x) ]
//     = H(pooled) - sum_i (n_i/N) H(hat P_i).
//
// Contractually equal to g_fn of the empirical pmfs with weights n_i/N; the
// two routes stay independent so tests can check the identity.
double gllr_numerator(const std::vector<std::vector<long long>>& counts);

}  // namespace bcl
