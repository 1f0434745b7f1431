#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sic/bits.hpp"

namespace sic {

using Edge = std::pair<int, int>;
using VertexList = std::vector<int>;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
/// Edges are stored normalized (u < v) and sorted; equality compares the
/// labeled edge sets, never isomorphism classes.
class Graph {
 public:
  Graph() = default;

  /// Throws PreconditionError on self-loops, duplicate edges or endpoints
  /// outside 0..n-1.
  explicit Graph(int n, std::vector<Edge> edges = {}, std::string name = {});

  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] int size() const { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] Graph renamed(std::string name) const;

  [[nodiscard]] bool adjacent(int u, int v) const {
    return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  [[nodiscard]] const VertexList& neighbors(int v) const { return adj_[v]; }
  [[nodiscard]] int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  [[nodiscard]] int max_degree() const;

  /// Adjacency rows as bitsets; throws GuardError when n > Bits::kMaxBits.
  [[nodiscard]] std::vector<Bits> rows() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexList> adj_;
  std::vector<unsigned char> matrix_;
  std::string name_;
};

/// One vertex per edge of g (numbered by the sorted edge list); two are
/// adjacent iff the edges share an endpoint.
Graph line_graph(const Graph& g);

/// Blockwise relabeled disjoint union.
Graph disjoint_union(std::span<const Graph> gs);
Graph disjoint_union(const Graph& a, const Graph& b);

/// G[U], relabeled to 0..|U|-1 in increasing order of U.
Graph induced_subgraph(const Graph& g, const VertexList& vertices);

/// G - U.
Graph remove_vertices(const Graph& g, const VertexList& vertices);

Graph complement(const Graph& g);

/// Graph with the given edges removed (edges must exist).
Graph remove_edges(const Graph& g, const std::vector<Edge>& edges);

/// Applies a bijection perm: V(g) -> 0..n-1.
Graph relabel(const Graph& g, const VertexList& perm);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<VertexList> components(const Graph& g);
std::vector<VertexList> components_avoiding(const Graph& g, const std::vector<bool>& removed);
bool is_connected(const Graph& g);

bool is_complete(const Graph& g);
bool is_clique(const Graph& g, const VertexList& vertices);
bool is_independent(const Graph& g, const VertexList& vertices);

/// Lexicographically smallest among shortest paths from `from` to any vertex
/// of `targets`, avoiding `blocked`. Empty when no path exists.
VertexList shortest_path(const Graph& g, int from, const std::vector<bool>& targets,
                         const std::vector<bool>& blocked);

/// Same, starting from any vertex of `sources`.
VertexList shortest_path_between(const Graph& g, const std::vector<bool>& sources,
                                 const std::vector<bool>& targets,
                                 const std::vector<bool>& blocked);

std::vector<bool> membership(int n, const VertexList& vertices);
VertexList sorted_unique(VertexList vs);
VertexList set_difference(const VertexList& a, const VertexList& b);
VertexList set_union(const VertexList& a, const VertexList& b);
VertexList set_intersection(const VertexList& a, const VertexList& b);

}  // namespace sic
