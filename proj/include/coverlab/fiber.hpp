#pragma once

// Fiber-cone invariants of quasi-equigenerated monomial ideals. Under a
// grading that makes the ideal equigenerated, F(I) is the monomial
// subalgebra k[f_1, ..., f_t], so everything here is computed from the
// generators' exponent vectors.

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "coverlab/grading.hpp"
#include "coverlab/graph.hpp"
#include "coverlab/ideal.hpp"
#include "coverlab/kernels.hpp"

namespace coverlab {

struct FiberReport {
  std::size_t t = 0;       // mu(I)
  std::size_t l = 0;       // analytic spread
  std::size_t a = 0;       // t - l
  std::uint64_t mu2 = 0;   // mu(I^2)
  std::uint64_t b = 0;     // degree-2 minimal generators of the defining ideal
  bool freiman = false;
  bool linear_type = false;
  WeightWitness witness;
};

/// A minimal binomial generator T^lhs - T^rhs of the defining ideal, as
/// multisets of generator indices.
struct ToricRelation {
  kernels::IndexMultiset lhs;
  kernels::IndexMultiset rhs;
  std::size_t degree() const { return lhs.size(); }
};

struct ToricProfile {
  std::size_t max_degree = 0;
  std::map<std::size_t, std::size_t> counts;  // degree -> number of new minimal generators, 2..max_degree
  std::vector<ToricRelation> relations;       // one representative per minimal generator

  std::size_t count(std::size_t degree) const;
  std::size_t total() const;
  /// Generator index appears in some representative.
  bool involves(std::size_t generator) const;
};

/// Rank of the exponent matrix. Cross-checked against affine dimension + 1;
/// the unit ideal (degree-0 witness) has fiber cone k[T] and spread 1.
/// Throws InputError if the witness does not certify the ideal.
std::size_t analytic_spread(const MonomialIdeal& ideal, const WeightWitness& witness);

/// Dimension of the affine hull of the exponent vectors.
std::size_t affine_dimension(const MonomialIdeal& ideal);

/// Throws NotQuasiEquigenerated when no witness exists.
FiberReport fiber_report(const MonomialIdeal& ideal);

/// Value of C(l+j-2, j-1) mu - (j-1) C(l+j-2, j).
std::int64_t freiman_power_formula(std::size_t l, std::size_t mu, unsigned j);

struct PowerCheck {
  unsigned j = 0;
  std::uint64_t computed = 0;
  std::int64_t formula = 0;
  bool equal() const { return static_cast<std::int64_t>(computed) == formula; }
};

/// mu(I^j) against the Freiman power formula for 1 <= j <= j_max.
std::vector<PowerCheck> herzog_power_check(const MonomialIdeal& ideal, unsigned j_max);

/// Minimal binomial generators of the defining ideal up to degree max_degree,
/// found degree by degree as connected components of multiset fibers under
/// the lower-degree relations. Throws NotQuasiEquigenerated or CapacityError.
ToricProfile toric_profile(const MonomialIdeal& ideal, std::size_t max_degree);

/// Same computation on the serial reference kernels.
ToricProfile toric_profile_serial(const MonomialIdeal& ideal, std::size_t max_degree);

/// Vertices lying in exactly one maximal independent set, with that set.
std::vector<std::pair<Vertex, VertexList>> unique_set_vertices(const Graph& g);

/// Indices into cover_ideal(g).generators() of the generators h_U for the
/// sets reported by unique_set_vertices (deduplicated, ascending).
std::vector<std::size_t> prime_generator_indices(const Graph& g);

struct JoinFreimanCheck {
  bool computed = false;  // Freiman(J(G1 + G2))
  bool expected = false;  // both Freiman and at least one of linear type
  bool g1_freiman = false, g2_freiman = false;
  bool g1_linear = false, g2_linear = false;
  bool holds() const { return computed == expected; }
};

/// Labels of g1 and g2 must be disjoint. Throws NotQuasiEquigenerated when a
/// component ideal is not quasi-equigenerated.
JoinFreimanCheck join_freiman_check(const Graph& g1, const Graph& g2);

}  // namespace coverlab
