#pragma once
#include <vector>

namespace bcl {

// Zero-sum matrix game: the row player mixes over the K arms, the column
// player over a finite set of gradients (one per near-minimal alternative
// hypothesis). Entry (k, c) is <e_k - x, grad_c>.
struct GamePayoff {
  int num_rows = 0;
  std::vector<int> columns;      // hypothesis index behind each column
  std::vector<double> entries;   // row-major num_rows x columns.size()

  int num_cols() const { return static_cast<int>(columns.size()); }
  double at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * columns.size() +
                   static_cast<std::size_t>(c)];
  }
};

struct GameSolution {
  std::vector<double> row_mix;  // z on the simplex
  double value = 0.0;           // attained min over columns of z^T M
  std::vector<double> col_mix;  // optimal column mixture (duality certificate)
};

// Maximizes min over columns of z^T M over the simplex, exactly, via a dense
// phase-2 simplex on the shifted game LP with Bland's rule (deterministic,
// cycle-free). A single-column payoff short-circuits to the best vertex,
// lowest arm index on ties.
GameSolution solve_game(const GamePayoff& payoff, double tol = 1e-9);

}  // namespace bcl
