#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coverlab/graph.hpp"

namespace coverlab::trees {

/// All free trees on n vertices, one per isomorphism class, labeled x1..xn.
/// Rooted trees come from canonical level sequences; duplicates are removed
/// through the center-rooted canonical form.
std::vector<Graph> free_trees(std::size_t n);

/// Isomorphism-invariant string of a tree (AHU encoding rooted at the center).
std::string canonical_form(const Graph& tree);

}  // namespace coverlab::trees
