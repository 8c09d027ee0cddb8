#pragma once

#include <optional>
#include <vector>

#include "jetample/linalg.hpp"

namespace jetample {

// Exact rational cone membership: find lambda >= 0 with
// sum_i lambda_i * columns[i] = target. Phase-1 simplex with Bland's rule,
// so termination is unconditional and every answer is exact.
inline std::optional<std::vector<Rational>> cone_membership(const std::vector<Vec>& columns,
                                                            const Vec& target) {
  const std::size_t n = target.size();
  const std::size_t m = columns.size();
  for (const auto& c : columns) {
    require(c.size() == n, Errc::DimensionMismatch, "cone generator arity");
  }
  if (vec_is_zero(target)) return std::vector<Rational>(m, Rational(0));

  // Tableau [A | I | b] with b >= 0 after row sign normalization.
  const std::size_t cols = m + n + 1;
  std::vector<Vec> t(n, Vec(cols, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    int s = target[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < m; ++j) t[i][j] = s * columns[j][i];
    t[i][m + i] = 1;
    t[i][cols - 1] = s * target[i];
  }
  // Objective row stores z_j - c_j for minimizing the artificial sum.
  Vec obj(cols, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) obj[j] += t[i][j];
  }
  for (std::size_t i = 0; i < n; ++i) obj[cols - 1] += t[i][cols - 1];

  std::vector<std::size_t> basis(n);
  for (std::size_t i = 0; i < n; ++i) basis[i] = m + i;

  for (;;) {
    // Bland: smallest column with positive reduced cost enters.
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;  // optimal
    std::size_t leave = n;
    Rational best_ratio = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols - 1] / t[i][enter];
      if (leave == n || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == n) break;  // unbounded direction cannot occur for phase 1, but stay safe
    Rational piv = t[leave][enter];
    for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (obj[enter] != 0) {
      Rational f = obj[enter];
      for (std::size_t j = 0; j < cols; ++j) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (obj[cols - 1] != 0) return std::nullopt;  // artificial sum positive: infeasible
  std::vector<Rational> lambda(m, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (basis[i] < m) lambda[basis[i]] = t[i][cols - 1];
  }
  return lambda;
}

}  // namespace jetample
