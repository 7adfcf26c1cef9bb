#include <random>

#include "coverlab/families.hpp"
#include "coverlab/grading.hpp"
#include "coverlab/ratlin.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coverlab;
using ratlin::RatMatrix;

TEST_CASE("rank of small matrices") {
  CHECK(ratlin::rank(RatMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3)) == 3);
  CHECK(ratlin::rank(RatMatrix(2, 5)) == 0);
  CHECK(ratlin::rank(RatMatrix::from_rows({{0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 0}}, 4)) == 3);
  CHECK(ratlin::rank(RatMatrix::from_rows({{1, 2}, {2, 4}}, 2)) == 1);
  CHECK(ratlin::rank(RatMatrix(0, 3)) == 0);
}

TEST_CASE("kernel basis") {
  auto k = ratlin::kernel_basis(RatMatrix::from_rows({{1, -1}}, 2));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == k[0][1]);
  CHECK(k[0][0] != 0);

  CHECK(ratlin::kernel_basis(RatMatrix::from_rows({{1, 0}, {0, 1}, {1, 1}}, 2)).empty());
  CHECK(ratlin::kernel_basis(RatMatrix(0, 3)).size() == 3);
}

TEST_CASE("every kernel vector of the P5 difference matrix vanishes on x3") {
  const auto m = difference_matrix(cover_ideal(family::path(5)));
  const auto k = ratlin::kernel_basis(m);
  CHECK(!k.empty());
  for (const auto& v : k) {
    CHECK(v[2] == 0);
    const auto img = m.apply(v);
    for (const auto& x : img) CHECK(x == 0);
  }
}

TEST_CASE("positive solution basics") {
  auto s = ratlin::positive_solution(RatMatrix(0, 3));
  REQUIRE(s);
  CHECK(*s == std::vector<ratlin::Integer>{1, 1, 1});

  CHECK_FALSE(ratlin::positive_solution(difference_matrix(cover_ideal(family::path(5)))));

  // x1 - 2 x2 = 0 forces (2, 1)
  auto t = ratlin::positive_solution(RatMatrix::from_rows({{1, -2}}, 2));
  REQUIRE(t);
  CHECK(*t == std::vector<ratlin::Integer>{2, 1});

  // x1 + x2 = 0 has no positive solution
  CHECK_FALSE(ratlin::positive_solution(RatMatrix::from_rows({{1, 1}}, 2)));
}

TEST_CASE("positive solutions agree with a grid search on random systems") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> entry(-2, 2), dim(1, 4);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = dim(rng), cols = dim(rng) + 1;
    std::vector<std::vector<std::int64_t>> r(rows, std::vector<std::int64_t>(cols));
    for (auto& row : r)
      for (auto& x : row) x = entry(rng);
    const auto m = RatMatrix::from_rows(r, cols);
    const auto sol = ratlin::positive_solution(m);

    // exhaustive search for alpha in {1..6}^cols
    bool grid = false;
    std::vector<std::int64_t> a(cols, 1);
    for (;;) {
      bool ok = true;
      for (const auto& row : r) {
        std::int64_t s = 0;
        for (std::size_t c = 0; c < cols; ++c) s += row[c] * a[c];
        if (s != 0) ok = false;
      }
      if (ok) { grid = true; break; }
      std::size_t i = 0;
      while (i < cols && a[i] == 6) a[i++] = 1;
      if (i == cols) break;
      ++a[i];
    }
    if (grid) CHECK(sol.has_value());
    if (sol) {
      ++feasible;
      for (std::size_t c = 0; c < cols; ++c) CHECK((*sol)[c] >= 1);
      ratlin::RatVector v(sol->begin(), sol->end());
      for (const auto& x : m.apply(v)) CHECK(x == 0);
    }
  }
  CHECK(feasible > 10);
}
