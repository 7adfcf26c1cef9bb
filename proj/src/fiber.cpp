#include "coverlab/fiber.hpp"

#include <algorithm>
#include <stdexcept>

#include "coverlab/capacity.hpp"
#include "coverlab/error.hpp"
#include "coverlab/families.hpp"
#include "coverlab/ratlin.hpp"

namespace coverlab {

std::size_t ToricProfile::count(std::size_t degree) const {
  auto it = counts.find(degree);
  return it == counts.end() ? 0 : it->second;
}

std::size_t ToricProfile::total() const {
  std::size_t s = 0;
  for (const auto& [d, c] : counts) s += c;
  return s;
}

bool ToricProfile::involves(std::size_t generator) const {
  return std::any_of(relations.begin(), relations.end(), [&](const ToricRelation& r) {
    return std::binary_search(r.lhs.begin(), r.lhs.end(), generator) ||
           std::binary_search(r.rhs.begin(), r.rhs.end(), generator);
  });
}

namespace {

ratlin::RatMatrix exponent_matrix(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  ratlin::RatMatrix m(gens.size(), ideal.universe().size());
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = static_cast<long>(gens[r][c]);
  return m;
}

WeightWitness require_witness(const MonomialIdeal& ideal) {
  auto w = quasi_witness(ideal);
  if (!w) throw NotQuasiEquigenerated();
  return *w;
}

std::uint64_t choose2(std::uint64_t n) { return n * (n - 1) / 2; }

}  // namespace

std::size_t affine_dimension(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InputError("affine_dimension: zero ideal");
  return ratlin::rank(difference_matrix(ideal, 0));
}

std::size_t analytic_spread(const MonomialIdeal& ideal, const WeightWitness& witness) {
  if (!verify_witness(ideal, witness)) throw InputError("analytic_spread: witness does not certify the ideal");
  const std::size_t affine = affine_dimension(ideal) + 1;
  if (witness.common_degree == 0) return affine;
  const std::size_t r = ratlin::rank(exponent_matrix(ideal));
  if (r != affine) throw std::logic_error("analytic_spread: rank differs from affine dimension + 1");
  return r;
}

FiberReport fiber_report(const MonomialIdeal& ideal) {
  FiberReport rep;
  rep.witness = require_witness(ideal);
  rep.t = ideal.num_generators();
  rep.l = analytic_spread(ideal, rep.witness);
  rep.a = rep.t - rep.l;
  rep.mu2 = mu_power(ideal, 2);
  rep.b = choose2(rep.t + 1) - rep.mu2;
  const auto bound = static_cast<std::int64_t>(rep.l * rep.t) - static_cast<std::int64_t>(choose2(rep.l));
  rep.freiman = static_cast<std::int64_t>(rep.mu2) == bound;
  if (rep.b > choose2(rep.a + 1)) throw std::logic_error("fiber_report: b exceeds C(a+1, 2)");
  if (rep.freiman != (rep.b == choose2(rep.a + 1)))
    throw std::logic_error("fiber_report: Freiman equality and b = C(a+1, 2) disagree");
  rep.linear_type = rep.l == rep.t;
  return rep;
}

std::int64_t freiman_power_formula(std::size_t l, std::size_t mu, unsigned j) {
  if (j == 0) throw InputError("freiman_power_formula: j must be >= 1");
  const std::uint64_t top = l + j - 2;
  const auto c1 = binomial(top, j - 1), c2 = binomial(top, j);
  return static_cast<std::int64_t>(c1 * mu) - static_cast<std::int64_t>((j - 1) * c2);
}

std::vector<PowerCheck> herzog_power_check(const MonomialIdeal& ideal, unsigned j_max) {
  const auto rep = fiber_report(ideal);
  std::vector<PowerCheck> out;
  for (unsigned j = 1; j <= j_max; ++j) {
    check_products(binomial(rep.t + j - 1, j), "herzog_power_check");
    out.push_back({j, mu_power(ideal, j), freiman_power_formula(rep.l, rep.t, j)});
  }
  return out;
}

namespace {

template <class Components>
ToricProfile toric_profile_with(const MonomialIdeal& ideal, std::size_t max_degree, Components&& components) {
  if (max_degree < 2) throw InputError("toric_profile: max degree must be >= 2");
  require_witness(ideal);
  const auto& gens = ideal.generators();
  const std::size_t t = gens.size();
  check_products(binomial(t + max_degree - 1, max_degree), "toric_profile");

  ToricProfile prof;
  prof.max_degree = max_degree;
  std::vector<kernels::Move> moves;
  for (std::size_t r = 2; r <= max_degree; ++r) {
    // Fibers keyed by the exact summed exponent vector.
    std::map<Monomial, std::vector<kernels::IndexMultiset>> by_sum;
    kernels::for_each_multiset(t, r, [&](const kernels::IndexMultiset& idx) {
      Monomial p = gens[idx[0]];
      for (std::size_t k = 1; k < idx.size(); ++k) p = p * gens[idx[k]];
      by_sum[std::move(p)].push_back(idx);
    });
    std::vector<kernels::Fiber> fibers;
    for (auto& [sum, members] : by_sum)
      if (members.size() > 1) {
        std::sort(members.begin(), members.end());
        fibers.push_back({std::move(members)});
      }

    const auto reps = components(std::span<const kernels::Fiber>(fibers), std::span<const kernels::Move>(moves));
    std::size_t found = 0;
    std::vector<kernels::Move> fresh;
    for (const auto& comp : reps)
      for (std::size_t k = 1; k < comp.size(); ++k) {
        prof.relations.push_back({comp[0], comp[k]});
        fresh.push_back({comp[0], comp[k]});
        ++found;
      }
    prof.counts[r] = found;
    moves.insert(moves.end(), fresh.begin(), fresh.end());
  }
  return prof;
}

}  // namespace

ToricProfile toric_profile(const MonomialIdeal& ideal, std::size_t max_degree) {
  return toric_profile_with(ideal, max_degree, [](auto f, auto m) { return kernels::parallel::fiber_components(f, m); });
}

ToricProfile toric_profile_serial(const MonomialIdeal& ideal, std::size_t max_degree) {
  return toric_profile_with(ideal, max_degree, [](auto f, auto m) { return kernels::serial::fiber_components(f, m); });
}

std::vector<std::pair<Vertex, VertexList>> unique_set_vertices(const Graph& g) {
  const auto fam = maximal_independent_sets(g);
  std::vector<std::pair<Vertex, VertexList>> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexList* only = nullptr;
    std::size_t hits = 0;
    for (const auto& s : fam.sets)
      if (std::binary_search(s.begin(), s.end(), v)) {
        ++hits;
        only = &s;
      }
    if (hits == 1) out.emplace_back(v, *only);
  }
  return out;
}

std::vector<std::size_t> prime_generator_indices(const Graph& g) {
  const auto ideal = cover_ideal(g);
  std::vector<std::size_t> out;
  for (const auto& [v, set] : unique_set_vertices(g)) {
    Monomial h(std::vector<Exponent>(g.order(), 1));
    for (Vertex u : set) h[u] = 0;
    const std::size_t idx = ideal.find(h);
    if (idx == ideal.num_generators()) throw std::logic_error("prime_generator_indices: set has no generator");
    out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

JoinFreimanCheck join_freiman_check(const Graph& g1, const Graph& g2) {
  const auto r1 = fiber_report(cover_ideal(g1));
  const auto r2 = fiber_report(cover_ideal(g2));
  JoinFreimanCheck c;
  c.g1_freiman = r1.freiman;
  c.g2_freiman = r2.freiman;
  c.g1_linear = r1.linear_type;
  c.g2_linear = r2.linear_type;
  c.expected = r1.freiman && r2.freiman && (r1.linear_type || r2.linear_type);
  c.computed = fiber_report(cover_ideal(family::join(g1, g2))).freiman;
  return c;
}

}  // namespace coverlab
