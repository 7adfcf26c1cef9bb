#include "coverlab/kernels.hpp"

#include <algorithm>
#include <numeric>


namespace coverlab::kernels {

namespace {

bool by_degree(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  return da != db ? da < db : a < b;
}

void sort_unique(std::vector<Monomial>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Sorted by ascending degree and deduplicated; returns the start of each
// degree block's predecessors, i.e. for element i the count of elements of
// strictly smaller degree.
std::vector<std::size_t> prepare(std::vector<Monomial>& v) {
  std::sort(v.begin(), v.end(), by_degree);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::vector<std::size_t> lower(v.size());
  std::size_t block = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0 && v[i].degree() != v[i - 1].degree()) block = i;
    lower[i] = block;
  }
  return lower;
}

bool dominated(const std::vector<Monomial>& v, std::size_t i, std::size_t lower) {
  for (std::size_t j = 0; j < lower; ++j)
    if (v[j].divides(v[i])) return true;
  return false;
}

std::vector<Monomial> collect(std::vector<Monomial>& v, const std::vector<char>& keep) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (keep[i]) out.push_back(std::move(v[i]));
  std::sort(out.begin(), out.end(), grlex_before);
  return out;
}

Monomial multiset_product(std::span<const Monomial> gens, const IndexMultiset& idx) {
  Monomial p = gens[idx[0]];
  for (std::size_t k = 1; k < idx.size(); ++k) p = p * gens[idx[k]];
  return p;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

// U - a + b as a sorted multiset, or false when a is not contained in U.
bool apply_move(const IndexMultiset& u, const IndexMultiset& a, const IndexMultiset& b, IndexMultiset& out) {
  if (!std::includes(u.begin(), u.end(), a.begin(), a.end())) return false;
  IndexMultiset rest;
  std::set_difference(u.begin(), u.end(), a.begin(), a.end(), std::back_inserter(rest));
  out.clear();
  std::merge(rest.begin(), rest.end(), b.begin(), b.end(), std::back_inserter(out));
  return true;
}

ComponentReps components_of(const Fiber& fiber, std::span<const Move> moves) {
  const auto& mem = fiber.members;
  UnionFind uf(mem.size());
  IndexMultiset w;
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (const auto& mv : moves)
      for (int dir = 0; dir < 2; ++dir) {
        const auto& from = dir == 0 ? mv.lhs : mv.rhs;
        const auto& to = dir == 0 ? mv.rhs : mv.lhs;
        if (!apply_move(mem[i], from, to, w)) continue;
        auto it = std::lower_bound(mem.begin(), mem.end(), w);
        if (it != mem.end() && *it == w) uf.unite(i, static_cast<std::size_t>(it - mem.begin()));
      }
  ComponentReps reps;
  for (std::size_t i = 0; i < mem.size(); ++i)
    if (uf.find(i) == i) reps.push_back(mem[i]);
  return reps;
}

}  // namespace

namespace serial {

std::vector<Monomial> minimal_elements(std::vector<Monomial> monomials) {
  const auto lower = prepare(monomials);
  std::vector<char> keep(monomials.size());
  for (std::size_t i = 0; i < monomials.size(); ++i) keep[i] = !dominated(monomials, i, lower[i]);
  return collect(monomials, keep);
}

std::vector<Monomial> distinct_multiset_products(std::span<const Monomial> gens, unsigned m) {
  std::vector<Monomial> out;
  if (m == 0 || gens.empty()) return out;
  for_each_multiset(gens.size(), m, [&](const IndexMultiset& idx) { out.push_back(multiset_product(gens, idx)); });
  sort_unique(out);
  std::sort(out.begin(), out.end(), grlex_before);
  return out;
}

std::vector<ComponentReps> fiber_components(std::span<const Fiber> fibers, std::span<const Move> moves) {
  std::vector<ComponentReps> out(fibers.size());
  for (std::size_t f = 0; f < fibers.size(); ++f) out[f] = components_of(fibers[f], moves);
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<Monomial> minimal_elements(std::vector<Monomial> monomials) {
  const auto lower = prepare(monomials);
  const auto n = static_cast<std::ptrdiff_t>(monomials.size());
  std::vector<char> keep(monomials.size());
#pragma omp parallel for schedule(dynamic, 64) if (n > 256)
  for (std::ptrdiff_t i = 0; i < n; ++i) keep[i] = !dominated(monomials, i, lower[i]);
  return collect(monomials, keep);
}

std::vector<Monomial> distinct_multiset_products(std::span<const Monomial> gens, unsigned m) {
  if (m == 0 || gens.empty()) return {};
  const auto t = static_cast<std::ptrdiff_t>(gens.size());
  std::vector<std::vector<Monomial>> buckets(gens.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t first = 0; first < t; ++first) {
    auto& local = buckets[first];
    for_each_multiset_from(gens.size(), m, first,
                           [&](const IndexMultiset& idx) { local.push_back(multiset_product(gens, idx)); });
    sort_unique(local);
  }
  std::vector<Monomial> out;
  for (auto& b : buckets) std::move(b.begin(), b.end(), std::back_inserter(out));
  sort_unique(out);
  std::sort(out.begin(), out.end(), grlex_before);
  return out;
}

std::vector<ComponentReps> fiber_components(std::span<const Fiber> fibers, std::span<const Move> moves) {
  std::vector<ComponentReps> out(fibers.size());
  const auto n = static_cast<std::ptrdiff_t>(fibers.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t f = 0; f < n; ++f) out[f] = components_of(fibers[f], moves);
  return out;
}

}  // namespace parallel

}  // namespace coverlab::kernels
