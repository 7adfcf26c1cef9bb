#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version used by the
// library and a serial reference kept for cross-checking and benchmarks.
// Both produce identical, canonically ordered output.

#include <cstddef>
#include <span>
#include <vector>

#include "coverlab/ideal.hpp"

namespace coverlab::kernels {

/// Multiset of generator indices, sorted ascending.
using IndexMultiset = std::vector<std::size_t>;

/// One fiber of the degree-r multiset map: all multisets with equal exponent sum.
struct Fiber {
  std::vector<IndexMultiset> members;  // sorted
};

/// A binomial relation between two index multisets of equal size.
struct Move {
  IndexMultiset lhs;
  IndexMultiset rhs;
};

/// Representatives (the smallest member) of each connected component of a
/// fiber under the moves, components ordered by representative.
using ComponentReps = std::vector<IndexMultiset>;

namespace serial {
std::vector<Monomial> minimal_elements(std::vector<Monomial> monomials);
std::vector<Monomial> distinct_multiset_products(std::span<const Monomial> gens, unsigned m);
std::vector<ComponentReps> fiber_components(std::span<const Fiber> fibers, std::span<const Move> moves);
}  // namespace serial

namespace parallel {
std::vector<Monomial> minimal_elements(std::vector<Monomial> monomials);
std::vector<Monomial> distinct_multiset_products(std::span<const Monomial> gens, unsigned m);
std::vector<ComponentReps> fiber_components(std::span<const Fiber> fibers, std::span<const Move> moves);
}  // namespace parallel

/// Calls fn(multiset) for every non-decreasing index sequence of length r
/// over [0, t) whose first element is `first`.
template <class Fn>
void for_each_multiset_from(std::size_t t, std::size_t r, std::size_t first, Fn&& fn) {
  if (r == 0 || first >= t) return;
  IndexMultiset cur(r, first);
  for (;;) {
    fn(static_cast<const IndexMultiset&>(cur));
    std::size_t i = r;
    while (i > 1 && cur[i - 1] + 1 == t) --i;
    if (i == 1) return;
    const std::size_t v = cur[i - 1] + 1;
    for (std::size_t j = i - 1; j < r; ++j) cur[j] = v;
  }
}

template <class Fn>
void for_each_multiset(std::size_t t, std::size_t r, Fn&& fn) {
  for (std::size_t first = 0; first < t; ++first) for_each_multiset_from(t, r, first, fn);
}

}  // namespace coverlab::kernels
