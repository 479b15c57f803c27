#include "evspace/simplex.hpp"

#include <cassert>
#include <stdexcept>

#include "evspace/errors.hpp"

namespace evspace::lp {

FeasibilityResult solve_feasibility(const Matrix& A, const std::vector<Rational>& b) {
  const std::size_t m = A.size();
  if (b.size() != m) throw InputError("solve_feasibility: row count mismatch");
  const std::size_t n = m ? A.front().size() : 0;
  for (const auto& row : A)
    if (row.size() != n) throw InputError("solve_feasibility: ragged matrix");

  // Columns: n structural, m artificial, then the right-hand side. The
  // artificial block starts as the identity and therefore tracks B^-1.
  const std::size_t cols = n + m + 1;
  const std::size_t rhs = n + m;
  std::vector<int> sign(m, 1);
  Matrix T(m, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) sign[i] = -1;
    for (std::size_t j = 0; j < n; ++j) T[i][j] = sign[i] < 0 ? Rational(-A[i][j]) : A[i][j];
    T[i][n + i] = 1;
    T[i][rhs] = sign[i] < 0 ? Rational(-b[i]) : b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Phase-1 cost: 1 on artificials. Reduced costs d_j = c_j - c_B^T B^-1 A_j.
  std::vector<Rational> reduced(cols);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) reduced[j] -= T[i][j];
  for (std::size_t i = 0; i < m; ++i) reduced[rhs] -= T[i][rhs];  // -objective

  std::vector<std::size_t> nonzero;
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < rhs; ++j)
      if (sgn(reduced[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(T[i][enter]) <= 0) continue;
      Rational ratio = T[i][rhs] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase 1 is bounded below by zero, so an entering column always has a
    // positive entry.
    assert(leave != m);

    auto& pivot_row = T[leave];
    Rational pivot = pivot_row[enter];
    nonzero.clear();
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(pivot_row[j]) == 0) continue;
      pivot_row[j] /= pivot;
      nonzero.push_back(j);
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(T[i][enter]) == 0) continue;
      Rational f = T[i][enter];
      for (std::size_t j : nonzero) T[i][j] -= f * pivot_row[j];
    }
    if (sgn(reduced[enter]) != 0) {
      Rational f = reduced[enter];
      for (std::size_t j : nonzero) reduced[j] -= f * pivot_row[j];
    }
    basis[leave] = enter;
  }

  FeasibilityResult out;
  Rational objective = -reduced[rhs];
  if (sgn(objective) == 0) {
    out.feasible = true;
    out.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) out.x[basis[i]] = T[i][rhs];
    return out;
  }

  // y'^T = c_B^T B^-1 for the sign-adjusted system; y = S y'.
  out.farkas.assign(m, Rational(0));
  for (std::size_t k = 0; k < m; ++k) {
    Rational y;
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= n) y += T[i][n + k];
    out.farkas[k] = sign[k] < 0 ? Rational(-y) : y;
  }
  return out;
}

}  // namespace evspace::lp
