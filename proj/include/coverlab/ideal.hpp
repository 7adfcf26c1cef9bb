#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coverlab/graph.hpp"

namespace coverlab {

using Exponent = std::uint32_t;

/// Dense exponent vector over a fixed variable universe.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  /// Product; throws CapacityError on exponent overflow.
  Monomial operator*(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Canonical generator order: higher total degree first, ties broken by
/// descending lexicographic comparison of exponent vectors (x1 > x2 > ...).
bool grlex_before(const Monomial& a, const Monomial& b);

/// Monomial ideal with its canonical minimal generating set. An empty
/// generator list is the zero ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes `monomials`; each must have universe.size() exponents.
  MonomialIdeal(std::vector<std::string> universe, std::vector<Monomial> monomials);

  static MonomialIdeal unit(std::vector<std::string> universe);

  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t num_generators() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  /// Exponent-vector index of a generator, or num_generators() if absent.
  std::size_t find(const Monomial& m) const;

  /// "x1*x3^2*x5" style; "1" for the unit monomial.
  std::string format(const Monomial& m) const;
  std::vector<std::string> formatted_generators() const;

  /// Every generator of `other` is divisible by some generator of this ideal.
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::vector<std::string> universe_;
  std::vector<Monomial> gens_;
};

/// Deduplicates and drops monomials strictly divisible by another.
MonomialIdeal minimalize(std::vector<std::string> universe, std::vector<Monomial> monomials);

/// J(G): one generator per maximal independent set U, the product of the
/// variables outside U. Edgeless graphs give the unit ideal.
MonomialIdeal cover_ideal(const Graph& g);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

/// I^m by iterated products with minimalization after each step. m = 0 gives the unit ideal.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned m);

/// I^m from all C(t+m-1, m) multiset products at once; the independent route.
MonomialIdeal power_by_multisets(const MonomialIdeal& ideal, unsigned m);

std::size_t mu_power(const MonomialIdeal& ideal, unsigned m);

/// Minimalized pairwise lcms. Throws InputError on a universe mismatch.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// (x_u, x_v)^m in the universe of g.
MonomialIdeal edge_ideal_power(const Graph& g, Vertex u, Vertex v, unsigned m);

/// J(G)^{(m)}: intersection of (x_u, x_v)^m over all edges.
MonomialIdeal symbolic_power(const Graph& g, unsigned m);

/// d_alpha(f) = sum_i alpha_i c_i. Throws InputError on length mismatch.
std::int64_t weighted_degree(const Monomial& f, std::span<const std::int64_t> alpha);

}  // namespace coverlab
