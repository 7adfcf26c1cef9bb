#pragma once

// Graph constructors. Vertex labels follow the usual conventions: x1..xn for
// the base vertices, y-labels for the second clique of A_{n,m} and for
// whisker leaves.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "coverlab/graph.hpp"

namespace coverlab::family {

Graph edgeless(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t leaves);
Graph complete_bipartite(std::size_t a, std::size_t b);

/// P_{(n,s)}: x_i ~ x_j whenever 0 < |i - j| <= s.
Graph banded_path(std::size_t n, std::size_t s);

/// C_n(1, ..., s), 1 <= s <= n/2.
Graph circulant(std::size_t n, std::size_t s);

/// Disjoint union plus every edge between U1 and U2 (indices into g1, g2).
/// Labels of g1 and g2 must be disjoint.
Graph linked_join(const Graph& g1, std::span<const Vertex> u1, const Graph& g2, std::span<const Vertex> u2);

/// G1 + G2 with every vertex of G1 adjacent to every vertex of G2.
Graph join(const Graph& g1, const Graph& g2);

/// Adds a pendant leaf y_i to each vertex x_i (labels "y<i>", 1-based).
Graph whisker(const Graph& g);

/// A_{n,m}: K_n on x1..xn and K_{m-1} on y2..ym, with xn adjacent to every y. m >= n >= 2.
Graph two_cliques(std::size_t n, std::size_t m);

/// Independent-set families of H_k: H_3's six pairs, then the recursive surgery.
std::vector<VertexList> h_family_sets(std::size_t k);

/// H_k on x1..x_{2k}; k >= 3. Asserts its maximal independent sets are exactly h_family_sets(k).
Graph h_family(std::size_t k);

/// Graph on x1..xn whose edges are the pairs not contained in any listed set.
Graph from_independent_sets(std::size_t n, std::span<const VertexList> sets);

/// Renames vertices to prefix1..prefixn.
Graph relabel(const Graph& g, const std::string& prefix);

}  // namespace coverlab::family
