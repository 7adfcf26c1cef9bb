#include "coverlab/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "coverlab/ideal.hpp"

namespace coverlab {

namespace {

std::string format_relation(const ToricRelation& r) {
  auto side = [](const kernels::IndexMultiset& s) {
    std::string out;
    for (std::size_t i : s) {
      if (!out.empty()) out += '*';
      out += "T" + std::to_string(i + 1);
    }
    return out;
  };
  return side(r.lhs) + " - " + side(r.rhs);
}

bool same_fiber_invariants(const FiberReport& a, const ToricProfile& pa, const MonomialIdeal& ia,
                           const FiberReport& b, const ToricProfile& pb, const MonomialIdeal& ib) {
  if (a.t != b.t || a.l != b.l || a.mu2 != b.mu2 || pa.counts != pb.counts) return false;
  return mu_power(ia, 3) == mu_power(ib, 3);
}

}  // namespace

bool AnalysisReport::all_theorems_hold() const {
  return std::all_of(theorems.begin(), theorems.end(), [](const TheoremCheck& c) { return c.holds(); });
}

AnalysisReport analyze(const Graph& g, const AnalysisOptions& opts) {
  AnalysisReport r;
  const auto fam = maximal_independent_sets(g);
  const auto ideal = cover_ideal(g);
  const Graph reduced = reduce(g);

  r.order = g.order();
  r.edge_count = g.edge_count();
  r.independence_number = fam.independence_number();
  r.reduced_order = reduced.order();
  r.equivalent_pairs = equivalent_pairs(g).size();
  r.generators = ideal.formatted_generators();
  r.equigenerated = is_equigenerated(ideal);
  r.witness = quasi_witness(ideal);
  const bool quasi = r.witness.has_value();

  bool equal_sets = std::all_of(fam.sets.begin(), fam.sets.end(),
                                [&](const VertexList& s) { return s.size() == fam.sets.front().size(); });
  r.theorems.push_back({"equigen", true, equal_sets, r.equigenerated});
  r.theorems.push_back({"quasic2", r.independence_number == 2, true, quasi});

  bool all_gi = true;
  for (Vertex v = 0; v < g.order() && quasi; ++v) all_gi = all_gi && quasi_witness(cover_ideal(g_sub(g, v))).has_value();
  r.theorems.push_back({"quasi1", quasi, true, all_gi});

  const bool reduced_quasi = quasi_witness(cover_ideal(reduced)).has_value();
  r.theorems.push_back({"reduced", r.equivalent_pairs > 0, quasi, reduced_quasi});

  if (is_tree(g)) r.theorems.push_back(tree_quasi_expected(g));

  if (!quasi) return r;

  r.fiber = fiber_report(ideal);
  const auto& f = *r.fiber;
  r.toric = toric_profile(ideal, opts.max_toric_degree);
  for (const auto& rel : r.toric->relations) r.toric_relations.push_back(format_relation(rel));
  if (opts.powers >= 1) r.powers = herzog_power_check(ideal, opts.powers);

  const bool almost = is_almost_complete(g);
  r.theorems.push_back({"almostfreiman", almost && g.order() >= 4, true, f.freiman && f.linear_type});

  const std::uint64_t cap = static_cast<std::uint64_t>(f.a) * (f.a + 1) / 2;
  r.theorems.push_back({"freimanlemma", true, true, f.b <= cap && (f.freiman == (f.b == cap))});

  const auto bound = static_cast<std::int64_t>(f.l * f.t) - static_cast<std::int64_t>(f.l * (f.l - 1) / 2);
  r.theorems.push_back({"freiman-inequality", true, true, static_cast<std::int64_t>(f.mu2) >= bound});

  bool higher_free = true;
  for (const auto& [deg, count] : r.toric->counts) higher_free = higher_free && (deg < 3 || count == 0);
  r.theorems.push_back({"2generated", f.freiman, true, higher_free});

  r.theorems.push_back({"toric-degree2", true, true, r.toric->count(2) == f.b});

  if (r.powers.size() >= 2) {
    bool any = false, all = true;
    for (const auto& p : r.powers)
      if (p.j >= 2) {
        any = any || p.equal();
        all = all && p.equal();
      }
    r.theorems.push_back({"herzogthm", true, f.freiman, any == all ? all : !f.freiman});
  }

  if (r.equivalent_pairs > 0 && reduced_quasi) {
    const auto rideal = cover_ideal(reduced);
    const auto rf = fiber_report(rideal);
    const auto rp = toric_profile(rideal, opts.max_toric_degree);
    r.theorems.push_back({"sdefequal", true, true, same_fiber_invariants(f, *r.toric, ideal, rf, rp, rideal)});
  }

  const auto primes = prime_generator_indices(g);
  if (!primes.empty()) {
    const bool absent = std::none_of(primes.begin(), primes.end(), [&](std::size_t i) { return r.toric->involves(i); });
    r.theorems.push_back({"primelements", true, true, absent});
  }
  return r;
}

nlohmann::ordered_json to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["graph"] = {{"vertices", r.order},
                {"edges", r.edge_count},
                {"independence_number", r.independence_number},
                {"reduced_vertices", r.reduced_order},
                {"equivalent_pairs", r.equivalent_pairs}};
  j["cover_ideal"] = {{"mu", r.generators.size()}, {"generators", r.generators}};
  j["equigenerated"] = r.equigenerated;
  j["quasi_equigenerated"] = r.witness.has_value();
  if (r.witness)
    j["witness"] = {{"alpha", r.witness->alpha}, {"degree", r.witness->common_degree}};
  else
    j["witness"] = nullptr;

  if (r.fiber) {
    const auto& f = *r.fiber;
    nlohmann::ordered_json fj;
    fj["t"] = f.t;
    fj["l"] = f.l;
    fj["a"] = f.a;
    fj["mu2"] = f.mu2;
    fj["b"] = f.b;
    fj["freiman"] = f.freiman;
    fj["linear_type"] = f.linear_type;
    nlohmann::ordered_json pw = nlohmann::ordered_json::array();
    for (const auto& p : r.powers) pw.push_back({{"j", p.j}, {"mu", p.computed}, {"formula", p.formula}});
    fj["powers"] = pw;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto& [deg, c] : r.toric->counts) counts[std::to_string(deg)] = c;
    fj["toric"] = {{"max_degree", r.toric->max_degree}, {"counts", counts}, {"relations", r.toric_relations}};
    j["fiber"] = fj;
  } else {
    j["fiber"] = "not quasi-equigenerated";
  }

  nlohmann::ordered_json th = nlohmann::ordered_json::array();
  for (const auto& c : r.theorems)
    th.push_back({{"theorem", c.theorem},
                  {"applicable", c.applicable},
                  {"expected", c.expected},
                  {"computed", c.computed},
                  {"holds", c.holds()}});
  j["theorems"] = th;
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  os << "vertices: " << r.order << "  edges: " << r.edge_count << "  c(G): " << r.independence_number
     << "  reduced vertices: " << r.reduced_order << "\n";
  os << "cover ideal (" << r.generators.size() << " generators):\n";
  for (const auto& g : r.generators) os << "  " << g << "\n";
  os << "equigenerated: " << yes(r.equigenerated) << "\n";
  os << "quasi-equigenerated: " << yes(r.witness.has_value());
  if (r.witness) {
    os << "  alpha = (";
    for (std::size_t i = 0; i < r.witness->alpha.size(); ++i) os << (i ? "," : "") << r.witness->alpha[i];
    os << ")  degree " << r.witness->common_degree;
  }
  os << "\n";
  if (r.fiber) {
    const auto& f = *r.fiber;
    os << "fiber cone: t=" << f.t << " l=" << f.l << " a=" << f.a << " mu2=" << f.mu2 << " b=" << f.b
       << " freiman=" << yes(f.freiman) << " linear_type=" << yes(f.linear_type) << "\n";
    for (const auto& p : r.powers)
      os << "  mu(I^" << p.j << ") = " << p.computed << "  formula " << p.formula << (p.equal() ? "" : "  (differs)")
         << "\n";
    os << "toric generators up to degree " << r.toric->max_degree << ":";
    for (const auto& [deg, c] : r.toric->counts) os << "  " << deg << ":" << c;
    os << "\n";
    for (const auto& rel : r.toric_relations) os << "  " << rel << "\n";
  } else {
    os << "fiber cone: not quasi-equigenerated\n";
  }
  os << "theorem checks:\n";
  for (const auto& c : r.theorems) {
    os << "  " << c.theorem << ": ";
    if (!c.applicable)
      os << "n/a\n";
    else
      os << (c.holds() ? "ok" : "MISMATCH") << " (expected " << yes(c.expected) << ", computed " << yes(c.computed)
         << ")\n";
  }
  return os.str();
}

}  // namespace coverlab
