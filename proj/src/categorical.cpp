#include "bcl/categorical.hpp"

#include <cmath>
#include <stdexcept>

namespace bcl {

namespace {
constexpr double kSumTol = 1e-12;
}

Categorical::Categorical(Pmf probs) : p_(std::move(probs)) {
  if (p_.size() < 2) {
    throw std::invalid_argument("Categorical: alphabet size must be >= 2");
  }
  double sum = 0.0;
  for (double v : p_) {
    if (!(v >= 0.0)) {  // catches negatives and NaN
      throw std::invalid_argument("Categorical: entries must be >= 0");
    }
    sum += v;
  }
  if (std::fabs(sum - 1.0) > kSumTol) {
    throw std::invalid_argument("Categorical: entries must sum to 1 within 1e-12");
  }
}

ProblemInstance::ProblemInstance(std::vector<Categorical> arms) : arms_(std::move(arms)) {
  if (arms_.size() < 2) {
    throw std::invalid_argument("ProblemInstance: need at least 2 arms");
  }
  const int alphabet = arms_.front().alphabet_size();
  for (const auto& a : arms_) {
    if (a.alphabet_size() != alphabet) {
      throw std::invalid_argument("ProblemInstance: arms must share one alphabet");
    }
  }
  pmfs_.reserve(arms_.size());
  for (const auto& a : arms_) pmfs_.push_back(a.probs());
}

int ProblemInstance::alphabet_size() const {
  return arms_.empty() ? 0 : arms_.front().alphabet_size();
}

double ProblemInstance::p_min() const {
  double m = 1.0;
  for (const auto& a : arms_) {
    for (int x = 0; x < a.alphabet_size(); ++x) m = std::min(m, a[x]);
  }
  return m;
}

double linf_distance(const Pmf& p, const Pmf& q) {
  double d = 0.0;
  for (std::size_t a = 0; a < p.size(); ++a) d = std::max(d, std::fabs(p[a] - q[a]));
  return d;
}

}  // namespace bcl
