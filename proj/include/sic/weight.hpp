#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sic/graph.hpp"

namespace sic {

using Weight = mpq_class;

/// Parses "3", "-1/2", "0.25" into an exact rational.
Weight parse_weight(const std::string& text);
std::string format_weight(const Weight& w);

struct WeightedGraph {
  Graph graph;
  std::vector<Weight> weights;

  WeightedGraph() = default;
  /// Throws PreconditionError on a length mismatch or a negative weight.
  WeightedGraph(Graph g, std::vector<Weight> w);
  static WeightedGraph unit(Graph g);

  [[nodiscard]] Weight weight_of(const VertexList& vs) const;
};

/// Value of a candidate independent set. Ordering: heavier first, then fewer
/// vertices, then the set containing the lowest vertex where the two differ.
/// The order is preserved under adding the same disjoint set to both sides,
/// so independent subproblems can be optimized separately.
struct Score {
  Weight weight = 0;
  VertexList set;  // sorted

  static Score of(const WeightedGraph& wg, VertexList set);
};

/// True when a is strictly preferred to b.
bool better(const Score& a, const Score& b);

/// Sum over disjoint sets.
Score combine(const Score& a, const Score& b);

/// One rational per line (index order); blank lines and '#' comments ignored.
std::vector<Weight> parse_weights(const std::string& text);

}  // namespace sic
