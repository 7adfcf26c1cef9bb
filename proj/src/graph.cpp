#include "coverlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "coverlab/capacity.hpp"
#include "coverlab/error.hpp"

namespace coverlab {

Graph Graph::from_index_edges(std::vector<std::string> labels, std::span<const Edge> edges) {
  std::set<std::string_view> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw InputError("duplicate vertex label '" + l + "'");

  Graph g;
  g.adj_.resize(labels.size());
  for (auto [u, v] : edges) {
    if (u >= labels.size() || v >= labels.size()) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("loop at vertex '" + labels[u] + "'");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  g.labels_ = std::move(labels);
  return g;
}

Graph Graph::from_edge_list(std::vector<std::string> labels,
                            std::span<const std::pair<std::string, std::string>> edges) {
  std::map<std::string, Vertex, std::less<>> index;
  for (Vertex i = 0; i < labels.size(); ++i)
    if (!index.emplace(labels[i], i).second) throw InputError("duplicate vertex label '" + labels[i] + "'");
  std::vector<Edge> idx;
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) throw InputError("edge references unknown vertex '" + a + "'");
    if (ib == index.end()) throw InputError("edge references unknown vertex '" + b + "'");
    idx.emplace_back(ia->second, ib->second);
  }
  return from_index_edges(std::move(labels), idx);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adj_) twice += nb.size();
  return twice / 2;
}

std::optional<Vertex> Graph::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  VertexList sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::size_t> remap(order(), order());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= order()) throw InputError("induced: vertex index out of range");
    remap[sorted[i]] = i;
    labels.push_back(labels_[sorted[i]]);
  }
  std::vector<Edge> e;
  for (auto [u, v] : edges())
    if (remap[u] != order() && remap[v] != order()) e.emplace_back(remap[u], remap[v]);
  return from_index_edges(std::move(labels), e);
}

Graph Graph::without_vertex(Vertex v) const {
  if (v >= order()) throw InputError("vertex index out of range");
  VertexList keep;
  for (Vertex u = 0; u < order(); ++u)
    if (u != v) keep.push_back(u);
  return induced(keep);
}

std::size_t IndependentSetFamily::independence_number() const {
  std::size_t best = 0;
  for (const auto& s : sets) best = std::max(best, s.size());
  return best;
}

namespace {

using Mask = std::uint64_t;

VertexList to_list(Mask m) {
  VertexList out;
  while (m) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

// Maximal cliques of the complement graph.
void bron_kerbosch(const std::vector<Mask>& comp, Mask r, Mask p, Mask x, std::vector<VertexList>& out) {
  if (p == 0 && x == 0) {
    out.push_back(to_list(r));
    return;
  }
  Mask pivot_nb = 0;
  int best = -1;
  for (Mask px = p | x; px; px &= px - 1) {
    const auto u = std::countr_zero(px);
    const int c = std::popcount(p & comp[u]);
    if (c > best) {
      best = c;
      pivot_nb = comp[u];
    }
  }
  for (Mask cand = p & ~pivot_nb; cand; cand &= cand - 1) {
    const auto v = std::countr_zero(cand);
    const Mask bit = Mask{1} << v;
    bron_kerbosch(comp, r | bit, p & comp[v], x & comp[v], out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

IndependentSetFamily maximal_independent_sets(const Graph& g) {
  const std::size_t n = g.order();
  check_variables(n, "maximal_independent_sets");
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<Mask> comp(n);
  for (Vertex v = 0; v < n; ++v) {
    Mask nb = Mask{1} << v;
    for (Vertex u : g.neighbors(v)) nb |= Mask{1} << u;
    comp[v] = all & ~nb;
  }
  IndependentSetFamily fam;
  bron_kerbosch(comp, 0, all, 0, fam.sets);
  std::sort(fam.sets.begin(), fam.sets.end());
  return fam;
}

bool is_independent(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (g.adjacent(set[i], set[j])) return false;
  return true;
}

bool is_maximal_independent(const Graph& g, std::span<const Vertex> set) {
  if (!is_independent(g, set)) return false;
  std::vector<bool> in(g.order(), false);
  for (Vertex v : set) in[v] = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in[v]) continue;
    const bool blocked = std::any_of(set.begin(), set.end(), [&](Vertex u) { return g.adjacent(u, v); });
    if (!blocked) return false;
  }
  return true;
}

std::vector<Edge> equivalent_pairs(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.neighbors(u) == g.neighbors(v)) out.emplace_back(u, v);
  return out;
}

Graph reduce(const Graph& g) {
  Graph cur = g;
  for (;;) {
    const auto pairs = equivalent_pairs(cur);
    if (pairs.empty()) return cur;
    cur = cur.without_vertex(pairs.front().second);
  }
}

Graph g_sub(const Graph& g, Vertex v) {
  if (v >= g.order()) throw InputError("g_sub: vertex index out of range");
  VertexList keep;
  for (Vertex u = 0; u < g.order(); ++u)
    if (u != v && !g.adjacent(u, v)) keep.push_back(u);
  return g.induced(keep);
}

bool is_complete(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) + 1 != g.order()) return false;
  return true;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<bool> seen(g.order(), false);
  VertexList stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
  }
  return count == g.order();
}

bool is_tree(const Graph& g) {
  return g.order() > 0 && g.edge_count() + 1 == g.order() && is_connected(g);
}

bool is_almost_complete(const Graph& g) {
  if (g.order() == 0) return false;

  bool by_deletion = false;
  for (Vertex v = 0; v < g.order() && !by_deletion; ++v) by_deletion = is_complete(g.without_vertex(v));

  // Non-edges are exactly the 2-element independent sets.
  bool by_sets = true;
  std::vector<std::size_t> hits(g.order(), 0);
  std::size_t non_edges = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) {
        ++non_edges;
        ++hits[u];
        ++hits[v];
      }
  if (non_edges > 0) {
    const bool c_at_most_two = maximal_independent_sets(g).independence_number() <= 2;
    const bool common = std::any_of(hits.begin(), hits.end(), [&](std::size_t h) { return h == non_edges; });
    by_sets = c_at_most_two && common;
  }

  if (by_deletion != by_sets) throw std::logic_error("is_almost_complete: characterizations disagree");
  return by_deletion;
}

bool every_internal_vertex_has_leaf(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) continue;
    const auto& nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return g.degree(u) == 1; })) return false;
  }
  return true;
}

bool is_whiskering_of(const Graph& g, const Graph& h) {
  if (g.order() != 2 * h.order()) return false;
  VertexList core;
  std::vector<bool> in_core(g.order(), false);
  for (const auto& l : h.labels()) {
    auto idx = g.index_of(l);
    if (!idx) return false;
    core.push_back(*idx);
    in_core[*idx] = true;
  }
  for (Vertex a = 0; a < h.order(); ++a)
    for (Vertex b = a + 1; b < h.order(); ++b)
      if (h.adjacent(a, b) != g.adjacent(core[a], core[b])) return false;

  std::vector<bool> whiskered(g.order(), false);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_core[v]) continue;
    if (g.degree(v) != 1) return false;
    const Vertex anchor = g.neighbors(v).front();
    if (!in_core[anchor] || whiskered[anchor]) return false;
    whiskered[anchor] = true;
  }
  return true;
}

}  // namespace coverlab
