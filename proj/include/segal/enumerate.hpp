#pragma once

#include <vector>

#include "segal/forest.hpp"
#include "segal/graph_segal.hpp"

namespace segal {

/// One representative per isomorphism class of rooted trees on n vertices
/// (plain classes; labels v0, v1, ... are attached so the representatives can
/// be used in any flavour).
std::vector<RootedForest> all_rooted_trees(int n);

/// Representatives of planar (ordered) rooted trees on n vertices; a strictly
/// finer classification than all_rooted_trees.
std::vector<RootedForest> all_ordered_trees(int n);

/// One representative per isomorphism class of simple graphs on n vertices.
std::vector<Graph> all_simple_graphs(int n);

/// Multigraph classes on at most n vertices with at most max_edges edges
/// counted with multiplicity (no loops).
std::vector<Graph> all_multigraphs(int n, int max_edges);

}  // namespace segal
