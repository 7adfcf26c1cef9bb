#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coverlab/graph.hpp"
#include "coverlab/ideal.hpp"
#include "coverlab/ratlin.hpp"

namespace coverlab {

/// Positive weights alpha under which every generator has weighted degree
/// common_degree. The degree is 0 only for the unit ideal.
struct WeightWitness {
  std::vector<std::int64_t> alpha;
  std::int64_t common_degree = 0;

  friend bool operator==(const WeightWitness&, const WeightWitness&) = default;
};

/// All generators share one total degree. Throws InputError on the zero ideal.
bool is_equigenerated(const MonomialIdeal& ideal);

/// Equigeneration of J(G) decided on both sides: equal total degrees of the
/// cover ideal and equal cardinalities of the maximal independent sets.
/// A disagreement throws std::logic_error.
bool is_equigenerated(const Graph& g);

/// Rows are exponents(f_j) - exponents(f_baseline), j != baseline.
ratlin::RatMatrix difference_matrix(const MonomialIdeal& ideal, std::size_t baseline = 0);

/// Witness of quasi-equigeneration or nullopt. Equigenerated ideals short-cut
/// to the all-ones weight. Throws InputError on the zero ideal.
std::optional<WeightWitness> quasi_witness(const MonomialIdeal& ideal);

/// Always solves the linear system against the given baseline generator.
std::optional<WeightWitness> quasi_witness_lp(const MonomialIdeal& ideal, std::size_t baseline);

bool verify_witness(const MonomialIdeal& ideal, const WeightWitness& w);

/// A closed-form expectation next to the computed ground truth.
struct TheoremCheck {
  std::string theorem;
  bool applicable = true;
  bool expected = false;
  bool computed = false;

  bool holds() const { return !applicable || expected == computed; }
};

/// Both closed forms for quasi-equigeneration of J(C_n(1..s)):
/// printed: s >= (n-1)/3 or s = (n-3)/4;
/// derived (from G_1 = P_{(n-2s-1,s)}): s >= (n-2)/3 or s = (n-3)/4.
struct CirculantQuasiExpectation {
  bool printed = false;
  bool derived = false;
  bool disagree() const { return printed != derived; }
};
CirculantQuasiExpectation circulant_quasi_expected(std::size_t n, std::size_t s);

/// Tree criterion: every vertex of degree >= 2 has a leaf neighbour.
/// Throws InputError if t is not a tree.
TheoremCheck tree_quasi_expected(const Graph& t);

/// Independence number two forces quasi-equigeneration.
TheoremCheck c2_implies_quasi(const Graph& g);

}  // namespace coverlab
