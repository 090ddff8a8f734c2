#include "relaysel/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace relaysel {

std::vector<int> hungarian(const Matrix& weights) {
  if (!weights.square()) throw std::invalid_argument("hungarian: matrix must be square");
  for (double w : weights.data())
    if (!std::isfinite(w)) throw std::invalid_argument("hungarian: non-finite weight");

  const int n = weights.rows();
  if (n == 0) return {};

  // Shortest augmenting path on costs -w, 1-based with column 0 as the
  // virtual root. row_of[j] is the row currently assigned to column j.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), min_slack(n + 1);
  std::vector<int> row_of(n + 1, 0), prev_col(n + 1, 0);
  std::vector<char> visited(n + 1);

  for (int row = 1; row <= n; ++row) {
    row_of[0] = row;
    int col = 0;
    std::fill(min_slack.begin(), min_slack.end(), kInf);
    std::fill(visited.begin(), visited.end(), 0);
    do {
      visited[col] = 1;
      const int i = row_of[col];
      double delta = kInf;
      int next = 0;
      for (int j = 1; j <= n; ++j) {
        if (visited[j]) continue;
        const double reduced = -weights(i - 1, j - 1) - u[i] - v[j];
        if (reduced < min_slack[j]) {
          min_slack[j] = reduced;
          prev_col[j] = col;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          next = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (visited[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      col = next;
    } while (row_of[col] != 0);
    do {
      const int p = prev_col[col];
      row_of[col] = row_of[p];
      col = p;
    } while (col != 0);
  }

  std::vector<int> assignment(n, -1);
  for (int j = 1; j <= n; ++j) assignment[row_of[j] - 1] = j - 1;
  return assignment;
}

PaddedInstance pad(const KCardInstance& instance) {
  const int n = instance.n();
  const int m = instance.m();
  const int k = instance.k;
  if (k < 0 || k > std::min(n, m)) throw std::invalid_argument("pad: k must lie in [0, min(n, m)]");

  double max_w = 0.0;
  for (double w : instance.weights.data()) {
    if (!std::isfinite(w) || w < 0.0) throw std::invalid_argument("pad: weights must be finite and >= 0");
    max_w = std::max(max_w, w);
  }

  PaddedInstance p;
  p.size = n + m - k;
  p.a_value = (max_w + 1.0) * static_cast<double>(n + m);
  p.weights = Matrix(p.size, p.size, 0.0);
  for (int r = 0; r < p.size; ++r) {
    for (int c = 0; c < p.size; ++c) {
      const bool orig_row = r < n;
      const bool orig_col = c < m;
      if (orig_row && orig_col) {
        p.weights(r, c) = instance.weights(r, c);
      } else if (orig_row != orig_col) {
        p.weights(r, c) = p.a_value;
      }
    }
  }
  return p;
}

std::vector<std::optional<int>> extract(const std::vector<int>& perm, int n, int m) {
  if (static_cast<int>(perm.size()) < n) throw std::invalid_argument("extract: assignment shorter than n");
  std::vector<std::optional<int>> out(n);
  for (int i = 0; i < n; ++i)
    if (perm[i] < m) out[i] = perm[i];
  return out;
}

KCardSolution solve_kcard(const KCardInstance& instance) {
  const PaddedInstance padded = pad(instance);
  KCardSolution sol;
  sol.padded_assignment = hungarian(padded.weights);
  const auto rows = extract(sol.padded_assignment, instance.n(), instance.m());
  for (int i = 0; i < instance.n(); ++i) {
    if (!rows[i]) continue;
    sol.edges.emplace_back(i, *rows[i]);
    sol.total_weight += instance.weights(i, *rows[i]);
  }
  return sol;
}

}  // namespace relaysel
