#pragma once

#include <string>

#include "sic/graph.hpp"
#include "sic/random.hpp"
#include "sic/si.hpp"

namespace sic {

/// 3t^2 + t, the order of tS_{t,t,t}.
int tripod_order(int t);

/// Biclique A-B with a path C = (x, ..., y) hanging off it; x is the anchor.
struct BicliquePathInstance {
  Graph h;
  VertexList a, b;
  VertexList c;  // path order, c.front() = x, c.back() = y
  int t = 1;
};

/// Throws PreconditionError naming the first violated condition (1-6).
void validate(const BicliquePathInstance& inst);

/// H ->∩ tS_{t,t,t}: one copy per vertex of degree <= 2 of the tripod forest,
/// placed through an embedding induced at that vertex, plus t+1 biclique
/// placements that cut the edges between different spiders. Each local
/// embedding is searched for within `search_budget` nodes; past that the
/// explicit anchor construction is used (budget 0 forces it).
SiWitness witness_biclique_path(const BicliquePathInstance& inst, long long search_budget = 20000);

/// Removes the edges from v to (N(v) ∩ A) \ keep. V(h) must be A ∪ B ∪ {v}.
SiWitness witness_peel(const Graph& h, const VertexList& a, const VertexList& b, int v,
                       const VertexList& keep);

/// h must be isomorphic to X_p or Y_p with p >= 3t^2+t+1.
SiWitness witness_xy_to_tripods(const Graph& h, int t);

struct XYWitness {
  SiWitness witness;
  char reached = 'X';  // 'X' or 'Y'
};

/// Lemma conditions on V(h) = A ∪ B ∪ {v}; the result is X_p or Y_p.
XYWitness witness_biclique_plus_vertex(const Graph& h, const VertexList& a, const VertexList& b,
                                       int v, int p);

/// Clique A with three paths Q1, Q2, Q3 from a hub w to distinct y_i in A.
struct CliqueThreePathInstance {
  Graph h;
  VertexList a;
  int w = -1;
  VertexList q[3];  // each from w to y_i
  int t = 1;
};

/// Throws PreconditionError naming the first violated condition (1-7).
void validate(const CliqueThreePathInstance& inst);

SiWitness witness_clique_three_paths(const CliqueThreePathInstance& inst);

/// The two placed copies per component taking L(tS_{q,q,q}) to
/// tS_{q-1,q-1,q}.
SiWitness witness_linegraph_spider(int t, int q);

// Seeded valid instances, randomly relabeled.

BicliquePathInstance random_biclique_path_instance(Rng& rng, int t);

struct PeelInstance {
  Graph h;
  VertexList a, b, keep;
  int v = -1;
};
PeelInstance random_peel_instance(Rng& rng);

/// X_p or Y_p (kind 'X' or 'Y') with p = 3t^2+t+1+extra, shuffled.
Graph random_xy_instance(Rng& rng, int t, char kind, int extra);

enum class BicliqueVertexCase { MixedBoth, CompleteToOne, AnticompleteToOne };

struct BicliqueVertexInstance {
  Graph h;
  VertexList a, b;
  int v = -1;
  int p = 3;
};
BicliqueVertexInstance random_biclique_vertex_instance(Rng& rng, int p, BicliqueVertexCase kind);

CliqueThreePathInstance random_clique_three_paths_instance(Rng& rng, int t);

}  // namespace sic
