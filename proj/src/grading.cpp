#include "coverlab/grading.hpp"

#include <stdexcept>

#include "coverlab/error.hpp"

namespace coverlab {

namespace {

void require_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InputError("the zero ideal has no generators to grade");
}

WeightWitness all_ones(const MonomialIdeal& ideal) {
  WeightWitness w;
  w.alpha.assign(ideal.universe().size(), 1);
  w.common_degree = static_cast<std::int64_t>(ideal.generators().front().degree());
  return w;
}

}  // namespace

bool is_equigenerated(const MonomialIdeal& ideal) {
  require_nonzero(ideal);
  const auto d = ideal.generators().front().degree();
  for (const auto& f : ideal.generators())
    if (f.degree() != d) return false;
  return true;
}

bool is_equigenerated(const Graph& g) {
  const bool by_ideal = is_equigenerated(cover_ideal(g));
  const auto fam = maximal_independent_sets(g);
  bool by_sets = true;
  for (const auto& s : fam.sets) by_sets = by_sets && s.size() == fam.sets.front().size();
  if (by_ideal != by_sets) throw std::logic_error("equigeneration: ideal and independent-set tests disagree");
  return by_ideal;
}

ratlin::RatMatrix difference_matrix(const MonomialIdeal& ideal, std::size_t baseline) {
  require_nonzero(ideal);
  const auto& gens = ideal.generators();
  if (baseline >= gens.size()) throw InputError("difference_matrix: baseline out of range");
  const std::size_t n = ideal.universe().size();
  ratlin::RatMatrix m(gens.size() - 1, n);
  std::size_t row = 0;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (j == baseline) continue;
    for (std::size_t i = 0; i < n; ++i)
      m(row, i) = static_cast<long>(gens[j][i]) - static_cast<long>(gens[baseline][i]);
    ++row;
  }
  return m;
}

std::optional<WeightWitness> quasi_witness_lp(const MonomialIdeal& ideal, std::size_t baseline) {
  auto alpha = ratlin::positive_solution(difference_matrix(ideal, baseline));
  if (!alpha) return std::nullopt;
  WeightWitness w;
  for (const auto& a : *alpha) {
    if (!a.fits_slong_p()) throw CapacityError("quasi_witness: weight does not fit in 64 bits");
    w.alpha.push_back(a.get_si());
  }
  w.common_degree = weighted_degree(ideal.generators().front(), w.alpha);
  if (!verify_witness(ideal, w)) throw std::logic_error("quasi_witness: solver returned an invalid witness");
  return w;
}

std::optional<WeightWitness> quasi_witness(const MonomialIdeal& ideal) {
  if (is_equigenerated(ideal)) return all_ones(ideal);
  return quasi_witness_lp(ideal, 0);
}

bool verify_witness(const MonomialIdeal& ideal, const WeightWitness& w) {
  if (w.alpha.size() != ideal.universe().size()) return false;
  for (auto a : w.alpha)
    if (a < 1) return false;
  for (const auto& f : ideal.generators())
    if (weighted_degree(f, w.alpha) != w.common_degree) return false;
  return true;
}

CirculantQuasiExpectation circulant_quasi_expected(std::size_t n, std::size_t s) {
  if (n < 2 || s < 1 || s > n / 2) throw InputError("circulant_quasi_expected: need 1 <= s <= n/2");
  const bool quarter = 4 * s + 3 == n;
  return {3 * s + 1 >= n || quarter, 3 * s + 2 >= n || quarter};
}

TheoremCheck tree_quasi_expected(const Graph& t) {
  if (!is_tree(t)) throw InputError("tree_quasi_expected: graph is not a tree");
  TheoremCheck c{"Trees", true, every_internal_vertex_has_leaf(t), false};
  c.computed = quasi_witness(cover_ideal(t)).has_value();
  return c;
}

TheoremCheck c2_implies_quasi(const Graph& g) {
  TheoremCheck c{"quasic2", maximal_independent_sets(g).independence_number() == 2, true, false};
  c.computed = quasi_witness(cover_ideal(g)).has_value();
  return c;
}

}  // namespace coverlab
