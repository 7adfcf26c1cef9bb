#pragma once

#include <string>
#include <vector>

#include "coverlab/graph.hpp"

namespace coverlab {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Fixed list of small graphs (at most 10 vertices) covering the families
/// studied here plus a few classical graphs. Order is stable.
std::vector<NamedGraph> catalog();

/// The 7-vertex graph P5 linked to P2 through {x2, x3, x5}: its cover ideal is
/// quasi-equigenerated although one linking product is a minimal cover and
/// the other is not.
Graph link_counterexample();

}  // namespace coverlab
