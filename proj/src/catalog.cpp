#include "coverlab/catalog.hpp"

#include "coverlab/families.hpp"

namespace coverlab {

Graph link_counterexample() {
  const Graph p5 = family::path(5);
  const Graph p2 = family::relabel(family::path(2), "y");
  const VertexList u1{1, 2, 4};
  const VertexList u2{0, 1};
  return family::linked_join(p5, u1, p2, u2);
}

std::vector<NamedGraph> catalog() {
  using namespace family;
  std::vector<NamedGraph> c;
  auto add = [&](std::string name, Graph g) { c.push_back({std::move(name), std::move(g)}); };

  add("K1", complete(1));
  add("E3", edgeless(3));
  for (std::size_t n = 2; n <= 6; ++n) add("K" + std::to_string(n), complete(n));
  for (std::size_t n = 3; n <= 8; ++n) add("P" + std::to_string(n), path(n));
  for (std::size_t n = 4; n <= 9; ++n) add("C" + std::to_string(n), cycle(n));
  add("C6(1,2)", circulant(6, 2));
  add("C7(1,2)", circulant(7, 2));
  add("C8(1,2)", circulant(8, 2));
  add("C9(1,2)", circulant(9, 2));
  add("C10(1,3)", circulant(10, 3));
  add("P(6,2)", banded_path(6, 2));
  add("P(7,2)", banded_path(7, 2));
  add("A(2,4)", two_cliques(2, 4));
  add("A(3,3)", two_cliques(3, 3));
  add("A(3,4)", two_cliques(3, 4));
  add("A(4,4)", two_cliques(4, 4));
  add("H3", h_family(3));
  add("H4", h_family(4));
  add("H5", h_family(5));
  add("W(K1)", whisker(complete(1)));
  add("W(K3)", whisker(complete(3)));
  add("W(P3)", whisker(path(3)));
  add("W(C4)", whisker(cycle(4)));
  add("W(P4)", whisker(path(4)));
  add("Star4", star(4));
  add("K2,3", complete_bipartite(2, 3));
  add("K3,3", complete_bipartite(3, 3));
  add("K3+E2", join(complete(3), relabel(edgeless(2), "y")));
  add("P3+K2", join(path(3), relabel(complete(2), "y")));
  add("LinkCounterexample", link_counterexample());
  // x1..x4 complete, y adjacent to x1, x2: almost complete.
  add("AlmostK4", linked_join(complete(4), VertexList{0, 1}, relabel(complete(1), "y"), VertexList{0}));
  {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
      e.emplace_back(i, (i + 1) % 5);
      e.emplace_back(5 + i, 5 + (i + 2) % 5);
      e.emplace_back(i, 5 + i);
    }
    std::vector<std::string> labels;
    for (int i = 1; i <= 10; ++i) labels.push_back("x" + std::to_string(i));
    add("Petersen", Graph::from_index_edges(std::move(labels), e));
  }
  return c;
}

}  // namespace coverlab
