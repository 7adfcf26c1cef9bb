#include "coverlab/trees.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "coverlab/error.hpp"

namespace coverlab::trees {

namespace {

std::string encode(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex u : t.neighbors(v))
    if (u != parent) kids.push_back(encode(t, u, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

VertexList centers(const Graph& t) {
  const std::size_t n = t.order();
  if (n <= 2) {
    VertexList all(n);
    for (Vertex i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<std::size_t> deg(n);
  VertexList layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    VertexList next;
    for (Vertex v : layer)
      for (Vertex u : t.neighbors(v))
        if (--deg[u] == 1) next.push_back(u);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

Graph from_levels(const std::vector<std::size_t>& levels) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    std::size_t p = i;
    while (levels[--p] != levels[i] - 1) {
    }
    e.emplace_back(p, i);
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < levels.size(); ++i) labels.push_back("x" + std::to_string(i + 1));
  return Graph::from_index_edges(std::move(labels), e);
}

}  // namespace

std::string canonical_form(const Graph& tree) {
  if (!is_tree(tree)) throw InputError("canonical_form: graph is not a tree");
  std::string best;
  for (Vertex c : centers(tree)) {
    std::string s = encode(tree, c, tree.order());
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

std::vector<Graph> free_trees(std::size_t n) {
  if (n == 0) return {};
  // Rooted trees as level sequences, successor rule of Beyer and Hedetniemi.
  std::vector<std::size_t> levels(n);
  for (std::size_t i = 0; i < n; ++i) levels[i] = i;

  std::set<std::string> seen;
  std::vector<Graph> out;
  for (;;) {
    Graph t = from_levels(levels);
    if (seen.insert(canonical_form(t)).second) out.push_back(std::move(t));

    std::size_t p = n;
    for (std::size_t i = n; i-- > 1;)
      if (levels[i] >= 2) {
        p = i;
        break;
      }
    if (p == n) break;
    std::size_t q = p;
    while (levels[--q] != levels[p] - 1) {
    }
    for (std::size_t i = p; i < n; ++i) levels[i] = levels[i - (p - q)];
  }
  return out;
}

}  // namespace coverlab::trees
