#include "bcl/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace bcl {

/*
The maximin value u* = max_z min_c (z^T M)_c is solved as the classic game LP.
Shift the payoff so every entry is >= 1; with value v > 0 the column player's
problem becomes

    maximize 1^T y   subject to  M' y <= 1,  y >= 0,

whose optimum satisfies v = 1 / (1^T y*), column mixture = v y*, and whose
dual solution pi (read off the slack reduced costs) gives the row mixture
z = pi / (1^T pi). The tableau has K rows and |B| + K columns, the all-slack
basis is feasible, and Bland's rule keeps the pivoting deterministic and
cycle-free.
*/

namespace {

GameSolution solve_single_column(const GamePayoff& payoff) {
  GameSolution sol;
  int best = 0;
  for (int k = 1; k < payoff.num_rows; ++k) {
    if (payoff.at(k, 0) > payoff.at(best, 0)) best = k;
  }
  sol.row_mix.assign(static_cast<std::size_t>(payoff.num_rows), 0.0);
  sol.row_mix[static_cast<std::size_t>(best)] = 1.0;
  sol.value = payoff.at(best, 0);
  sol.col_mix = {1.0};
  return sol;
}

}  // namespace

GameSolution solve_game(const GamePayoff& payoff, double tol) {
  const int rows = payoff.num_rows;
  const int cols = payoff.num_cols();
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("solve_game: empty payoff");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("solve_game: tol must be > 0");
  }
  double lo = std::numeric_limits<double>::infinity();
  for (double v : payoff.entries) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("solve_game: non-finite payoff entry");
    }
    lo = std::min(lo, v);
  }
  if (cols == 1) return solve_single_column(payoff);

  const double shift = 1.0 - lo;  // entries of the shifted game are >= 1
  const int width = cols + rows;  // structural variables then slacks

  // Tableau rows: [M' | I] y' = 1. Reduced-cost row d starts at the
  // objective c = (1,...,1, 0,...,0) since the initial basis is all slacks.
  std::vector<std::vector<double>> tab(static_cast<std::size_t>(rows),
                                       std::vector<double>(static_cast<std::size_t>(width), 0.0));
  std::vector<double> rhs(static_cast<std::size_t>(rows), 1.0);
  std::vector<double> d(static_cast<std::size_t>(width), 0.0);
  std::vector<int> basis(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) tab[r][static_cast<std::size_t>(c)] = payoff.at(r, c) + shift;
    tab[r][static_cast<std::size_t>(cols + r)] = 1.0;
    basis[static_cast<std::size_t>(r)] = cols + r;
  }
  for (int c = 0; c < cols; ++c) d[static_cast<std::size_t>(c)] = 1.0;

  const long long max_pivots = 4LL * width * (rows + 2);  // Bland terminates well before this
  for (long long pivot = 0;; ++pivot) {
    if (pivot > max_pivots) {
      throw std::runtime_error("solve_game: pivot limit exceeded");
    }
    // Bland: entering variable with the smallest index among improving ones.
    int enter = -1;
    for (int j = 0; j < width; ++j) {
      if (d[static_cast<std::size_t>(j)] > tol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;  // optimal
    // Ratio test in two passes: find the minimum ratio, then (Bland) take the
    // smallest basis variable index among the rows that attain it.
    double min_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < rows; ++r) {
      const double a = tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(enter)];
      if (a > tol) min_ratio = std::min(min_ratio, rhs[static_cast<std::size_t>(r)] / a);
    }
    int leave = -1;
    const double ratio_cut = min_ratio + tol * std::max(1.0, std::fabs(min_ratio));
    for (int r = 0; r < rows; ++r) {
      const double a = tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(enter)];
      if (a > tol && rhs[static_cast<std::size_t>(r)] / a <= ratio_cut) {
        if (leave < 0 ||
            basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave)]) {
          leave = r;
        }
      }
    }
    if (leave < 0) {
      // The shifted game has all-positive columns, so this cannot trigger.
      throw std::runtime_error("solve_game: unbounded LP");
    }
    // Pivot on (leave, enter).
    auto& prow = tab[static_cast<std::size_t>(leave)];
    const double pivot_val = prow[static_cast<std::size_t>(enter)];
    for (double& v : prow) v /= pivot_val;
    rhs[static_cast<std::size_t>(leave)] /= pivot_val;
    for (int r = 0; r < rows; ++r) {
      if (r == leave) continue;
      auto& row = tab[static_cast<std::size_t>(r)];
      const double f = row[static_cast<std::size_t>(enter)];
      if (f != 0.0) {
        for (int j = 0; j < width; ++j) {
          row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
        }
        rhs[static_cast<std::size_t>(r)] -= f * rhs[static_cast<std::size_t>(leave)];
      }
    }
    const double fd = d[static_cast<std::size_t>(enter)];
    if (fd != 0.0) {
      for (int j = 0; j < width; ++j) {
        d[static_cast<std::size_t>(j)] -= fd * prow[static_cast<std::size_t>(j)];
      }
    }
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  GameSolution sol;
  // Column mixture from the primal solution y.
  std::vector<double> y(static_cast<std::size_t>(cols), 0.0);
  for (int r = 0; r < rows; ++r) {
    if (basis[static_cast<std::size_t>(r)] < cols) {
      y[static_cast<std::size_t>(basis[static_cast<std::size_t>(r)])] =
          std::max(0.0, rhs[static_cast<std::size_t>(r)]);
    }
  }
  double y_total = 0.0;
  for (double v : y) y_total += v;
  sol.col_mix.assign(static_cast<std::size_t>(cols), 0.0);
  for (int c = 0; c < cols; ++c) sol.col_mix[static_cast<std::size_t>(c)] = y[static_cast<std::size_t>(c)] / y_total;
  // Row mixture from the duals: pi_k = -reduced cost of slack k.
  sol.row_mix.assign(static_cast<std::size_t>(rows), 0.0);
  double pi_total = 0.0;
  for (int r = 0; r < rows; ++r) {
    const double pi = std::max(0.0, -d[static_cast<std::size_t>(cols + r)]);
    sol.row_mix[static_cast<std::size_t>(r)] = pi;
    pi_total += pi;
  }
  for (double& v : sol.row_mix) v /= pi_total;
  // Report the attained min so (z, u) is self-consistent to the last bit.
  double u = std::numeric_limits<double>::infinity();
  for (int c = 0; c < cols; ++c) {
    double dot = 0.0;
    for (int r = 0; r < rows; ++r) dot += sol.row_mix[static_cast<std::size_t>(r)] * payoff.at(r, c);
    u = std::min(u, dot);
  }
  sol.value = u;
  return sol;
}

}  // namespace bcl
