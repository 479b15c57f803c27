#include <doctest.h>

#include <random>

#include "evspace/simplex.hpp"
#include "support.hpp"

using namespace evspace;
using lp::Matrix;

namespace {

// A x = b with x >= 0, or y^T A <= 0 with y^T b > 0.
void check_result(const Matrix& A, const std::vector<Rational>& b, const lp::FeasibilityResult& res) {
  std::size_t cols = A.empty() ? 0 : A[0].size();
  if (res.feasible) {
    REQUIRE(res.x.size() == cols);
    for (const auto& xi : res.x) REQUIRE(xi >= 0);
    for (std::size_t i = 0; i < A.size(); ++i) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < cols; ++j) lhs += A[i][j] * res.x[j];
      REQUIRE(lhs == b[i]);
    }
  } else {
    REQUIRE(res.farkas.size() == A.size());
    for (std::size_t j = 0; j < cols; ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < A.size(); ++i) s += res.farkas[i] * A[i][j];
      REQUIRE(s <= 0);
    }
    Rational s = 0;
    for (std::size_t i = 0; i < A.size(); ++i) s += res.farkas[i] * b[i];
    REQUIRE(s > 0);
  }
}

}  // namespace

TEST_CASE("simplex: feasible simplex point") {
  Matrix A{{1, 1, 1}};
  std::vector<Rational> b{1};
  auto res = lp::solve_feasibility(A, b);
  CHECK(res.feasible);
  check_result(A, b, res);
}

TEST_CASE("simplex: infeasible pair of equations") {
  Matrix A{{1, 1}, {1, 1}};
  std::vector<Rational> b{1, 2};
  auto res = lp::solve_feasibility(A, b);
  CHECK_FALSE(res.feasible);
  check_result(A, b, res);
}

TEST_CASE("simplex: negative right-hand side") {
  Matrix A{{1, -1}};
  std::vector<Rational> b{-3};
  auto res = lp::solve_feasibility(A, b);
  CHECK(res.feasible);
  check_result(A, b, res);

  Matrix B{{1, 2}};
  std::vector<Rational> c{-1};
  auto none = lp::solve_feasibility(B, c);
  CHECK_FALSE(none.feasible);
  check_result(B, c, none);
}

TEST_CASE("simplex: redundant rows stay feasible") {
  Matrix A{{1, 0, 1}, {2, 0, 2}, {0, 1, 1}};
  std::vector<Rational> b{Rational(1, 2), 1, Rational(1, 3)};
  auto res = lp::solve_feasibility(A, b);
  CHECK(res.feasible);
  check_result(A, b, res);
}

TEST_CASE("simplex: randomized systems return valid certificates") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> coef(-3, 3);
  int feasible = 0;
  for (int iter = 0; iter < 400; ++iter) {
    int m = std::uniform_int_distribution<int>(1, 4)(rng);
    int n = std::uniform_int_distribution<int>(1, 6)(rng);
    Matrix A(m, std::vector<Rational>(n));
    std::vector<Rational> b(m);
    for (auto& row : A)
      for (auto& a : row) a = coef(rng);
    for (auto& bi : b) bi = testing::R(coef(rng), std::uniform_int_distribution<int>(1, 4)(rng));
    auto res = lp::solve_feasibility(A, b);
    check_result(A, b, res);
    feasible += res.feasible;
  }
  CHECK(feasible > 0);
  CHECK(feasible < 400);
}
