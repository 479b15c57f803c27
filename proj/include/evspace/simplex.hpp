#pragma once

#include <vector>

#include "evspace/rational.hpp"

namespace evspace::lp {

/// Dense row-major matrix of rationals.
using Matrix = std::vector<std::vector<Rational>>;

struct FeasibilityResult {
  bool feasible = false;
  /// A solution of A x = b, x >= 0 (present iff feasible).
  std::vector<Rational> x;
  /// Farkas multipliers y with y^T A <= 0 and y^T b > 0 (present iff infeasible).
  std::vector<Rational> farkas;
};

/// Phase-1 simplex over exact rationals with Bland's rule. Decides whether
/// {x >= 0 : A x = b} is non-empty and returns a certificate either way.
FeasibilityResult solve_feasibility(const Matrix& A, const std::vector<Rational>& b);

}  // namespace evspace::lp
