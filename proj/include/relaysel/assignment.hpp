#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "relaysel/matrix.hpp"

namespace relaysel {

// Maximum-weight perfect matching on a square matrix (Kuhn-Munkres with
// potentials, O(n^3)). Returns row -> column. Ties resolve to the first
// optimum found scanning rows in order.
// Throws std::invalid_argument for a non-square matrix or non-finite entries.
std::vector<int> hungarian(const Matrix& weights);

// Select at most k edges of a complete bipartite graph (n rows, m columns)
// with maximum total weight. Absent edges are weight 0.
struct KCardInstance {
  Matrix weights;  // n x m, entries >= 0
  int k = 0;

  int n() const { return weights.rows(); }
  int m() const { return weights.cols(); }
};

// The equivalent square standard-assignment instance. m-k pad rows and n-k
// pad columns are added; an original vertex meeting a pad vertex gets
// `a_value`, two pad vertices meet at 0.
struct PaddedInstance {
  int size = 0;
  Matrix weights;
  double a_value = 0.0;
};

struct KCardSolution {
  std::vector<std::pair<int, int>> edges;  // (row, col), ascending row
  double total_weight = 0.0;
  std::vector<int> padded_assignment;  // raw hungarian output on the padded matrix
};

// a_value = (max weight + 1) * (n + m), which exceeds the weight of every
// matching of the original instance. Throws std::invalid_argument when
// k is outside [0, min(n, m)] or a weight is negative or non-finite.
PaddedInstance pad(const KCardInstance& instance);

KCardSolution solve_kcard(const KCardInstance& instance);

// Maps the first n rows of a padded assignment back to the original
// columns; std::nullopt marks a row that took a pad column.
std::vector<std::optional<int>> extract(const std::vector<int>& perm, int n, int m);

}  // namespace relaysel
