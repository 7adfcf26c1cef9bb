#include <random>

#include "coverlab/kernels.hpp"
#include "doctest.h"

using namespace coverlab;

namespace {

std::vector<Monomial> random_monomials(std::mt19937_64& rng, std::size_t count, std::size_t vars, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Exponent> v(vars);
    for (auto& x : v) x = e(rng);
    out.emplace_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("multiset enumeration") {
  std::size_t count = 0;
  kernels::IndexMultiset prev;
  kernels::for_each_multiset(4, 3, [&](const kernels::IndexMultiset& m) {
    CHECK(std::is_sorted(m.begin(), m.end()));
    if (count > 0) CHECK(prev < m);
    prev = m;
    ++count;
  });
  CHECK(count == 20);
}

TEST_CASE("minimal elements: serial and parallel agree") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = random_monomials(rng, 50 + 40 * trial, 5, 3);
    const auto a = kernels::serial::minimal_elements(m);
    const auto b = kernels::parallel::minimal_elements(m);
    CHECK(a == b);
    for (const auto& x : a)
      for (const auto& y : a)
        if (!(x == y)) CHECK_FALSE(x.divides(y));
  }
}

TEST_CASE("distinct multiset products: serial and parallel agree") {
  std::mt19937_64 rng(4);
  for (unsigned r = 1; r <= 3; ++r) {
    const auto gens = random_monomials(rng, 9, 4, 2);
    const auto a = kernels::serial::distinct_multiset_products(gens, r);
    CHECK(a == kernels::parallel::distinct_multiset_products(gens, r));
    CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
  }
}

TEST_CASE("fiber components") {
  // fiber {0,3},{1,2},{2,2}; a move {0}->{1} does not apply in degree 1 only
  std::vector<kernels::Fiber> fibers{{{{0, 3}, {1, 2}, {2, 2}}}, {{{0, 0}}}};
  std::vector<kernels::Move> moves{{{0, 3}, {1, 2}}};
  const auto a = kernels::serial::fiber_components(fibers, moves);
  CHECK(a == kernels::parallel::fiber_components(fibers, moves));
  REQUIRE(a.size() == 2);
  CHECK(a[0] == kernels::ComponentReps{{0, 3}, {2, 2}});
  CHECK(a[1] == kernels::ComponentReps{{0, 0}});

  // a degree-2 move connects degree-3 multisets through a shared index
  std::vector<kernels::Fiber> f3{{{{0, 3, 5}, {1, 2, 5}}}};
  CHECK(kernels::serial::fiber_components(f3, moves)[0].size() == 1);
  CHECK(kernels::parallel::fiber_components(f3, moves)[0].size() == 1);
}
