#include "coverlab/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "coverlab/error.hpp"

namespace coverlab::family {

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t n, std::size_t first = 1) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(first + i));
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

}  // namespace

Graph edgeless(std::size_t n) { return Graph::from_index_edges(numbered("x", n), {}); }

Graph complete(std::size_t n) {
  require(n >= 1, "complete: n must be >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_index_edges(numbered("x", n), e);
}

Graph banded_path(std::size_t n, std::size_t s) {
  require(n >= 1 && s >= 1, "banded_path: need n >= 1 and s >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n && j <= i + s; ++j) e.emplace_back(i, j);
  return Graph::from_index_edges(numbered("x", n), e);
}

Graph path(std::size_t n) { return banded_path(n, 1); }

Graph circulant(std::size_t n, std::size_t s) {
  require(n >= 2 && s >= 1 && s <= n / 2, "circulant: need n >= 2 and 1 <= s <= n/2");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (std::size_t d = 1; d <= s; ++d) e.emplace_back(i, (i + d) % n);
  return Graph::from_index_edges(numbered("x", n), e);
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle: n must be >= 3");
  return circulant(n, 1);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_index_edges(numbered("x", leaves + 1), e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_index_edges(numbered("x", a + b), e);
}

Graph linked_join(const Graph& g1, std::span<const Vertex> u1, const Graph& g2, std::span<const Vertex> u2) {
  require(!u1.empty() && !u2.empty(), "linked_join: linking sets must be non-empty");
  std::vector<std::string> labels = g1.labels();
  labels.insert(labels.end(), g2.labels().begin(), g2.labels().end());
  std::vector<Edge> e = g1.edges();
  const std::size_t off = g1.order();
  for (auto [u, v] : g2.edges()) e.emplace_back(u + off, v + off);
  for (Vertex a : u1) {
    require(a < g1.order(), "linked_join: U1 index out of range");
    for (Vertex b : u2) {
      require(b < g2.order(), "linked_join: U2 index out of range");
      e.emplace_back(a, b + off);
    }
  }
  return Graph::from_index_edges(std::move(labels), e);
}

Graph join(const Graph& g1, const Graph& g2) {
  VertexList all1(g1.order()), all2(g2.order());
  for (Vertex i = 0; i < all1.size(); ++i) all1[i] = i;
  for (Vertex i = 0; i < all2.size(); ++i) all2[i] = i;
  return linked_join(g1, all1, g2, all2);
}

Graph whisker(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::string> labels = g.labels();
  for (auto& l : numbered("y", n)) {
    require(std::find(labels.begin(), labels.end(), l) == labels.end(),
            "whisker: leaf label '" + l + "' collides with a base label");
    labels.push_back(l);
  }
  std::vector<Edge> e = g.edges();
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, n + i);
  return Graph::from_index_edges(std::move(labels), e);
}

Graph two_cliques(std::size_t n, std::size_t m) {
  require(n >= 2 && m >= n, "two_cliques: need m >= n >= 2");
  std::vector<std::string> labels = numbered("x", n);
  for (auto& l : numbered("y", m - 1, 2)) labels.push_back(l);
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  for (Vertex i = n; i < n + m - 1; ++i) {
    for (Vertex j = i + 1; j < n + m - 1; ++j) e.emplace_back(i, j);
    e.emplace_back(n - 1, i);
  }
  return Graph::from_index_edges(std::move(labels), e);
}

std::vector<VertexList> h_family_sets(std::size_t k) {
  require(k >= 3, "h_family: k must be >= 3");
  // 0-based: x1 -> 0.
  std::vector<VertexList> sets{{0, 1}, {2, 3}, {4, 5}, {0, 2}, {1, 4}, {3, 5}};
  for (std::size_t n = 3; n < k; ++n) {
    // H_{n+1}: drop {x_{2n-2}, x_{2n}}; add {x_{2n+1}, x_{2n+2}}, {x_{2n-2}, x_{2n+1}}, {x_{2n}, x_{2n+2}}.
    const Vertex a = 2 * n - 3, b = 2 * n - 1, c = 2 * n, d = 2 * n + 1;
    auto it = std::find(sets.begin(), sets.end(), VertexList{a, b});
    if (it == sets.end()) throw std::logic_error("h_family: recursion lost {x_{2n-2}, x_{2n}}");
    sets.erase(it);
    sets.push_back({c, d});
    sets.push_back({a, c});
    sets.push_back({b, d});
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

Graph h_family(std::size_t k) {
  const auto sets = h_family_sets(k);
  Graph g = from_independent_sets(2 * k, sets);
  if (maximal_independent_sets(g).sets != sets)
    throw std::logic_error("h_family: listed sets are not the maximal independent sets");
  return g;
}

Graph from_independent_sets(std::size_t n, std::span<const VertexList> sets) {
  std::set<Edge> inside;
  for (const auto& s : sets)
    for (std::size_t i = 0; i < s.size(); ++i) {
      require(s[i] < n, "from_independent_sets: vertex index out of range");
      for (std::size_t j = i + 1; j < s.size(); ++j) inside.emplace(std::min(s[i], s[j]), std::max(s[i], s[j]));
    }
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!inside.contains({u, v})) e.emplace_back(u, v);
  return Graph::from_index_edges(numbered("x", n), e);
}

Graph relabel(const Graph& g, const std::string& prefix) {
  return Graph::from_index_edges(numbered(prefix, g.order()), g.edges());
}

}  // namespace coverlab::family
