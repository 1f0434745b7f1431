#pragma once

#include <string>
#include <vector>

#include "sic/graph.hpp"

namespace sic {

/// Isomorphism-invariant relabeling of g (individualization-refinement over
/// colour classes, keeping the largest adjacency code). Intended for small
/// graphs; twin pruning keeps cliques and bicliques cheap.
Graph canonical_form(const Graph& g);

/// graph6 string of canonical_form(g); equal keys iff isomorphic.
std::string canonical_key(const Graph& g);

/// One representative (in canonical form) of every isomorphism class on
/// exactly n vertices, sorted by key.
std::vector<Graph> graphs_on(int n);

/// All classes on 1..nmax vertices, ordered by n then key.
std::vector<Graph> graphs_up_to(int nmax);

}  // namespace sic
