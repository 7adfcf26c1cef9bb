#include "coverlab/catalog.hpp"
#include "coverlab/error.hpp"
#include "coverlab/families.hpp"
#include "coverlab/fiber.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coverlab;

namespace {

// Vertices missing from generator i, i.e. its maximal independent set.
std::set<Vertex> independent_set_of(const MonomialIdeal& j, std::size_t i) {
  std::set<Vertex> s;
  const auto& g = j.generators()[i];
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g[v] == 0) s.insert(v);
  return s;
}

std::set<std::set<Vertex>> side_sets(const MonomialIdeal& j, const kernels::IndexMultiset& side) {
  std::set<std::set<Vertex>> out;
  for (auto i : side) out.insert(independent_set_of(j, i));
  return out;
}

}  // namespace

TEST_CASE("analytic spread") {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto j = cover_ideal(family::complete(n));
    CHECK(analytic_spread(j, *quasi_witness(j)) == n);
  }
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t m = n; m <= 6; ++m) {
      const auto j = cover_ideal(family::two_cliques(n, m));
      CHECK(analytic_spread(j, *quasi_witness(j)) == n + m - 2);
    }
  const auto unit = cover_ideal(family::edgeless(3));
  CHECK(analytic_spread(unit, *quasi_witness(unit)) == 1);
}

TEST_CASE("analytic spread is the rank of the exponent matrix") {
  for (const auto& ng : catalog()) {
    const auto j = cover_ideal(ng.graph);
    const auto w = quasi_witness(j);
    if (!w || j.is_unit()) continue;
    const auto gens = oracle::exponents(j);
    CHECK_MESSAGE(analytic_spread(j, *w) == oracle::exponent_rank(gens), ng.name);
    CHECK_MESSAGE(affine_dimension(j) + 1 == oracle::exponent_rank(gens), ng.name);
  }
}

TEST_CASE("fiber report of the two-clique example") {
  const auto f = fiber_report(cover_ideal(family::two_cliques(3, 3)));
  CHECK(f.t == 5);
  CHECK(f.l == 4);
  CHECK(f.a == 1);
  CHECK(f.mu2 == 14);
  CHECK(f.b == 1);
  CHECK(f.freiman);
  CHECK_FALSE(f.linear_type);
}

TEST_CASE("fiber reports of H3 and A(4,4)") {
  const auto h = fiber_report(cover_ideal(family::h_family(3)));
  CHECK(h.b == 0);
  CHECK(h.a >= 1);
  CHECK_FALSE(h.freiman);

  const auto a = fiber_report(cover_ideal(family::two_cliques(4, 4)));
  CHECK(a.a == 4);
  CHECK(a.b == 9);
  CHECK_FALSE(a.freiman);
}

TEST_CASE("fiber report rejects ideals without a grading") {
  CHECK_THROWS_AS(fiber_report(cover_ideal(family::path(5))), NotQuasiEquigenerated);
}

TEST_CASE("degree-two counts against the fiber oracle") {
  for (const auto& ng : catalog()) {
    const auto j = cover_ideal(ng.graph);
    if (!quasi_witness(j)) continue;
    const auto f = fiber_report(j);
    const auto gens = oracle::exponents(j);
    CHECK_MESSAGE(f.b == oracle::degree_two_relations(gens), ng.name);
    CHECK_MESSAGE(f.mu2 == oracle::power(gens, 2).size(), ng.name);
    CHECK_MESSAGE(toric_profile(j, 2).count(2) == f.b, ng.name);
    CHECK(f.mu2 + 0 >= f.l * f.t - f.l * (f.l - 1) / 2);
  }
}

TEST_CASE("toric profiles") {
  const auto a = cover_ideal(family::two_cliques(3, 3));
  const auto p = toric_profile(a, 3);
  CHECK(p.counts == std::map<std::size_t, std::size_t>{{2, 1}, {3, 0}});
  REQUIRE(p.relations.size() == 1);
  // f2 f5 = f3 f4 in the generator order x1x2y2y3, x1x3y2, x1x3y3, x2x3y2, x2x3y3
  CHECK(p.relations[0].lhs == kernels::IndexMultiset{1, 4});
  CHECK(p.relations[0].rhs == kernels::IndexMultiset{2, 3});

  const auto h3 = cover_ideal(family::h_family(3));
  const auto q = toric_profile(h3, 3);
  CHECK(q.counts == std::map<std::size_t, std::size_t>{{2, 0}, {3, 1}});
  REQUIRE(q.relations.size() == 1);
  const std::set<std::set<std::set<Vertex>>> sides{side_sets(h3, q.relations[0].lhs),
                                                   side_sets(h3, q.relations[0].rhs)};
  const std::set<std::set<std::set<Vertex>>> expected{{{0, 1}, {2, 3}, {4, 5}}, {{0, 2}, {1, 4}, {3, 5}}};
  CHECK(sides == expected);

  for (std::size_t k = 3; k <= 5; ++k) {
    const auto hk = cover_ideal(family::h_family(k));
    const auto prof = toric_profile(hk, k);
    CHECK(prof.total() == 1);
    CHECK(prof.count(k) == 1);
  }

  CHECK_THROWS_AS(toric_profile(a, 1), InputError);
}

TEST_CASE("serial and parallel toric profiles agree") {
  for (const auto& ng : catalog()) {
    const auto j = cover_ideal(ng.graph);
    if (!quasi_witness(j) || j.num_generators() > 12) continue;
    const auto a = toric_profile(j, 3);
    const auto b = toric_profile_serial(j, 3);
    CHECK(a.counts == b.counts);
    REQUIRE(a.relations.size() == b.relations.size());
    for (std::size_t i = 0; i < a.relations.size(); ++i) {
      CHECK(a.relations[i].lhs == b.relations[i].lhs);
      CHECK(a.relations[i].rhs == b.relations[i].rhs);
    }
  }
}

TEST_CASE("power counts") {
  CHECK(freiman_power_formula(4, 5, 1) == 5);
  CHECK(freiman_power_formula(4, 5, 2) == 14);
  for (const auto& c : herzog_power_check(cover_ideal(family::two_cliques(3, 4)), 4)) CHECK(c.equal());
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& c : herzog_power_check(cover_ideal(family::complete(n)), 4)) CHECK(c.equal());
  const auto h = herzog_power_check(cover_ideal(family::h_family(3)), 2);
  REQUIRE(h.size() == 2);
  CHECK(h[0].equal());
  CHECK(static_cast<std::int64_t>(h[1].computed) > h[1].formula);
  CHECK(h[1].computed == oracle::power(oracle::exponents(cover_ideal(family::h_family(3))), 2).size());
}

TEST_CASE("prime generators") {
  const auto c4 = unique_set_vertices(family::cycle(4));
  CHECK(c4.size() == 4);
  CHECK(prime_generator_indices(family::cycle(4)).size() == 2);
  for (std::size_t n = 2; n <= 5; ++n) {
    const Graph k = family::complete(n);
    CHECK(prime_generator_indices(k).size() == n);
    CHECK(toric_profile(cover_ideal(k), 3).total() == 0);
  }
  const Graph w = family::whisker(family::cycle(4));
  for (auto& [v, set] : unique_set_vertices(w)) {
    CHECK(std::find(set.begin(), set.end(), v) != set.end());
    std::size_t containing = 0;
    for (const auto& s : maximal_independent_sets(w).sets)
      if (std::find(s.begin(), s.end(), v) != s.end()) ++containing;
    CHECK(containing == 1);
  }
}

TEST_CASE("fiber invariants survive removing equivalent vertices") {
  int pairs = 0;
  for (const auto& ng : catalog()) {
    if (equivalent_pairs(ng.graph).empty()) continue;
    const Graph r = reduce(ng.graph);
    const auto j = cover_ideal(ng.graph), jr = cover_ideal(r);
    CHECK(quasi_witness(j).has_value() == quasi_witness(jr).has_value());
    if (!quasi_witness(j)) continue;
    const auto a = fiber_report(j), b = fiber_report(jr);
    CHECK_MESSAGE(a.t == b.t, ng.name);
    CHECK(a.l == b.l);
    CHECK(a.mu2 == b.mu2);
    CHECK(a.b == b.b);
    CHECK(a.freiman == b.freiman);
    CHECK(a.linear_type == b.linear_type);
    CHECK(toric_profile(j, 3).counts == toric_profile(jr, 3).counts);
    CHECK(mu_power(j, 3) == mu_power(jr, 3));
    ++pairs;
  }
  CHECK(pairs >= 5);
}

TEST_CASE("joins") {
  auto y = [](const Graph& g) { return family::relabel(g, "y"); };
  const auto k = join_freiman_check(family::complete(2), y(family::complete(2)));
  CHECK(k.computed);
  CHECK(k.expected);
  const auto a = join_freiman_check(family::two_cliques(3, 3), family::relabel(family::complete(1), "z"));
  CHECK(a.computed);
  CHECK(a.holds());
  const auto h = join_freiman_check(family::h_family(3), y(family::complete(1)));
  CHECK_FALSE(h.computed);
  CHECK_FALSE(h.expected);
  CHECK_THROWS_AS(join_freiman_check(family::path(5), y(family::complete(1))), NotQuasiEquigenerated);
}
