#pragma once

#include <string>
#include <vector>

#include "sic/graph.hpp"
#include "sic/weight.hpp"

namespace sic {

struct TreeDecomposition {
  std::vector<VertexList> bags;  // each sorted
  std::vector<Edge> tree;        // edges between bag indices
  /// max |bag| - 1; -1 for the empty graph.
  [[nodiscard]] int width() const;
};

struct TreewidthResult {
  int width = -1;
  TreeDecomposition decomposition;
};

/// Bags of the elimination game along `order` (every vertex exactly once).
TreeDecomposition decomposition_from_order(const Graph& g, const VertexList& order);

/// Checks vertex cover, edge cover, connectivity of each vertex's bags and
/// that the bag graph is a tree; `why` names the first violation.
bool validate_decomposition(const Graph& g, const TreeDecomposition& td, std::string* why = nullptr);

inline constexpr int kExactTreewidthMaxOrder = 20;

/// Subset dynamic program over elimination orderings. GuardError above 20
/// vertices.
TreewidthResult exact_treewidth(const Graph& g);

/// Greedy min-fill elimination (ties to the lowest vertex).
TreewidthResult tw_upper_bound(const Graph& g);

/// Maximum weight independent set by dynamic programming over a nice form of
/// td. Throws PreconditionError when td is not a decomposition of wg.graph.
Score mwis_treedp(const WeightedGraph& wg, const TreeDecomposition& td);

}  // namespace sic
