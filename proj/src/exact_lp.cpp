#include "hyperkey/exact_lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace hyperkey {

std::optional<std::vector<Rational>> find_nonnegative_solution(const std::vector<std::vector<Rational>>& a,
                                                               const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("find_nonnegative_solution: dimension mismatch");
  const std::size_t cols = rows ? a.front().size() : 0;

  // Tableau columns: [original | artificial | rhs].
  const std::size_t width = cols + rows + 1;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != cols) throw std::invalid_argument("find_nonnegative_solution: ragged matrix");
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][cols + i] = 1;
    t[i][width - 1] = flip ? Rational(-b[i]) : b[i];
    basis[i] = cols + i;
  }

  // Reduced costs of w = sum of artificials, expressed over the nonbasics.
  std::vector<Rational> cost(width);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) cost[j] -= t[i][j];
  for (std::size_t i = 0; i < rows; ++i) cost[width - 1] -= t[i][width - 1];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction; cannot happen for w >= 0

    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational factor = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= factor * t[leave][j];
    }
    const Rational factor = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= factor * t[leave][j];
    basis[leave] = enter;
  }

  if (cost[width - 1] != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < cols) x[basis[i]] = t[i][width - 1];
  return x;
}

}  // namespace hyperkey
