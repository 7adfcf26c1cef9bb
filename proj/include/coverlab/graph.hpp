#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coverlab {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexList = std::vector<Vertex>;

/// Finite simple graph with labeled vertices. Adjacency lists are sorted and
/// symmetric; there are no loops. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on duplicate labels, unknown endpoints or loops.
  /// Repeated edges are merged.
  static Graph from_edge_list(std::vector<std::string> labels,
                              std::span<const std::pair<std::string, std::string>> edges);
  static Graph from_index_edges(std::vector<std::string> labels, std::span<const Edge> edges);

  std::size_t order() const { return labels_.size(); }
  std::size_t edge_count() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  std::optional<Vertex> index_of(std::string_view label) const;

  const VertexList& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// Induced subgraph on `keep` (any order; output keeps ascending index order).
  Graph induced(std::span<const Vertex> keep) const;
  Graph without_vertex(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<VertexList> adj_;
};

/// Maximal independent sets, each sorted, the list sorted lexicographically.
struct IndependentSetFamily {
  std::vector<VertexList> sets;

  /// c(G): the largest cardinality among the sets.
  std::size_t independence_number() const;
};

/// Bron-Kerbosch with pivoting on the complement graph. Up to 64 vertices.
IndependentSetFamily maximal_independent_sets(const Graph& g);

bool is_independent(const Graph& g, std::span<const Vertex> set);
bool is_maximal_independent(const Graph& g, std::span<const Vertex> set);

/// Pairs u < v with identical open neighborhoods.
std::vector<Edge> equivalent_pairs(const Graph& g);

/// Repeatedly deletes the higher-indexed vertex of the first equivalent pair.
Graph reduce(const Graph& g);

/// Induced subgraph on V minus the closed neighborhood of v.
Graph g_sub(const Graph& g, Vertex v);

bool is_complete(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// True when deleting one vertex leaves a complete graph. Both the deletion
/// test and the independent-set test (c(G) <= 2, all 2-element independent
/// sets share a vertex) are evaluated; a disagreement throws std::logic_error.
bool is_almost_complete(const Graph& g);

bool every_internal_vertex_has_leaf(const Graph& g);

/// True when g is the whiskering of h: h is the induced subgraph of g on the
/// labels of h, and every other vertex of g is a leaf hanging off a distinct
/// vertex of h, one per vertex.
bool is_whiskering_of(const Graph& g, const Graph& h);

}  // namespace coverlab
