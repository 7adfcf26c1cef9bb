#include "coverlab/ideal.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "coverlab/capacity.hpp"
#include "coverlab/error.hpp"
#include "coverlab/kernels.hpp"

namespace coverlab {

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const std::uint64_t e = std::uint64_t{exps_[i]} + other.exps_[i];
    if (e > std::numeric_limits<Exponent>::max()) throw CapacityError("monomial exponent overflow");
    out.exps_[i] = static_cast<Exponent>(e);
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return out;
}

bool grlex_before(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return b < a;
}

MonomialIdeal::MonomialIdeal(std::vector<std::string> universe, std::vector<Monomial> monomials)
    : universe_(std::move(universe)) {
  check_variables(universe_.size(), "MonomialIdeal");
  for (const auto& m : monomials)
    if (m.size() != universe_.size()) throw InputError("monomial length does not match the universe");
  gens_ = kernels::parallel::minimal_elements(std::move(monomials));
}

MonomialIdeal MonomialIdeal::unit(std::vector<std::string> universe) {
  const std::size_t n = universe.size();
  return MonomialIdeal(std::move(universe), {Monomial(n)});
}

std::size_t MonomialIdeal::find(const Monomial& m) const {
  auto it = std::lower_bound(gens_.begin(), gens_.end(), m, grlex_before);
  if (it != gens_.end() && *it == m) return static_cast<std::size_t>(it - gens_.begin());
  return gens_.size();
}

std::string MonomialIdeal::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += universe_[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<std::string> MonomialIdeal::formatted_generators() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(format(g));
  return out;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& f) {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(f); });
  });
}

MonomialIdeal minimalize(std::vector<std::string> universe, std::vector<Monomial> monomials) {
  return MonomialIdeal(std::move(universe), std::move(monomials));
}

MonomialIdeal cover_ideal(const Graph& g) {
  const std::size_t n = g.order();
  check_variables(n, "cover_ideal");
  std::vector<Monomial> gens;
  for (const auto& set : maximal_independent_sets(g).sets) {
    Monomial h(std::vector<Exponent>(n, 1));
    for (Vertex v : set) h[v] = 0;
    gens.push_back(std::move(h));
  }
  return MonomialIdeal(g.labels(), std::move(gens));
}

namespace {

void require_same_universe(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.universe() != b.universe()) throw InputError("monomial ideals live in different universes");
}

}  // namespace

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_universe(a, b);
  check_products(std::uint64_t{a.num_generators()} * b.num_generators(), "ideal product");
  std::vector<Monomial> prods;
  prods.reserve(a.num_generators() * b.num_generators());
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) prods.push_back(f * g);
  return MonomialIdeal(a.universe(), std::move(prods));
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned m) {
  if (m == 0) return MonomialIdeal::unit(ideal.universe());
  MonomialIdeal acc = ideal;
  for (unsigned k = 1; k < m; ++k) acc = product(acc, ideal);
  return acc;
}

MonomialIdeal power_by_multisets(const MonomialIdeal& ideal, unsigned m) {
  if (m == 0) return MonomialIdeal::unit(ideal.universe());
  const std::size_t t = ideal.num_generators();
  check_products(binomial(t + m - 1, m), "multiset products");
  return MonomialIdeal(ideal.universe(), kernels::parallel::distinct_multiset_products(ideal.generators(), m));
}

std::size_t mu_power(const MonomialIdeal& ideal, unsigned m) { return power(ideal, m).num_generators(); }

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_universe(a, b);
  check_products(std::uint64_t{a.num_generators()} * b.num_generators(), "ideal intersection");
  std::vector<Monomial> lcms;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) lcms.push_back(Monomial::lcm(f, g));
  return MonomialIdeal(a.universe(), std::move(lcms));
}

MonomialIdeal edge_ideal_power(const Graph& g, Vertex u, Vertex v, unsigned m) {
  if (u >= g.order() || v >= g.order() || u == v) throw InputError("edge_ideal_power: bad edge");
  std::vector<Monomial> gens;
  for (unsigned a = 0; a <= m; ++a) {
    Monomial h(g.order());
    h[u] = a;
    h[v] = m - a;
    gens.push_back(std::move(h));
  }
  return MonomialIdeal(g.labels(), std::move(gens));
}

MonomialIdeal symbolic_power(const Graph& g, unsigned m) {
  if (m == 0) throw InputError("symbolic_power: m must be >= 1");
  MonomialIdeal acc = MonomialIdeal::unit(g.labels());
  for (auto [u, v] : g.edges()) acc = intersect(acc, edge_ideal_power(g, u, v, m));
  return acc;
}

std::int64_t weighted_degree(const Monomial& f, std::span<const std::int64_t> alpha) {
  if (alpha.size() != f.size()) throw InputError("weighted_degree: weight vector length mismatch");
  std::int64_t d = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::int64_t term = 0;
    if (__builtin_mul_overflow(static_cast<std::int64_t>(f[i]), alpha[i], &term) ||
        __builtin_add_overflow(d, term, &d))
      throw CapacityError("weighted_degree: overflow");
  }
  return d;
}

}  // namespace coverlab
