#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sic/graph.hpp"
#include "sic/search.hpp"

namespace sic {

/// Injective map from 0..n-1 into the nonnegative integers.
struct VertexMap {
  std::vector<int> image;

  static VertexMap identity(int n);
  /// Throws PreconditionError unless injective with nonnegative values.
  void validate() const;
  [[nodiscard]] int size() const { return static_cast<int>(image.size()); }
  [[nodiscard]] int max_label() const;
};

/// Graph on an arbitrary finite set of nonnegative labels.
struct LabeledGraph {
  VertexList vertices;      // sorted
  std::vector<Edge> edges;  // sorted, u < v

  /// Relabels to 0..k-1 in increasing label order.
  [[nodiscard]] Graph normalize() const;
};

LabeledGraph apply_map(const Graph& g, const VertexMap& a);
LabeledGraph intersect(const LabeledGraph& a, const LabeledGraph& b);

/// A checkable proof that host self-intersects to claimed.
struct SiWitness {
  Graph host;
  std::vector<VertexMap> maps;
  Graph claimed;
};

/// Intersection of all placed copies, before normalization.
LabeledGraph witness_intersection(const SiWitness& w);
Graph evaluate_witness(const SiWitness& w);

/// True iff the evaluated intersection is isomorphic to the claimed graph;
/// otherwise `diagnostic` describes the first mismatch.
bool verify_witness(const SiWitness& w, std::string* diagnostic = nullptr);

struct SiOptions {
  /// Largest admissible n!/(n-h)! (number of placed patterns).
  double cost_cap = 5e7;
  bool want_witness = true;
};

struct SiResult {
  bool holds = false;
  std::optional<SiWitness> witness;
  long long patterns_seen = 0;
};

/// Pattern cost n!/(n-h)!, saturating at infinity.
double si_pattern_cost(int n, int h);

/// Decides whether h is an si-subgraph of g. A non-isomorphic target is one
/// iff every non-edge of h is a non-edge of some subgraph embedding of h into
/// g: the placed induced patterns of those embeddings intersect to h, and
/// lifting them with fresh labels per copy realizes that intersection.
/// Throws GuardError when the pattern cost exceeds the cap.
SiResult si_oracle(const Graph& g, const Graph& h, const SiOptions& opts = {});

/// Bounded definitional search: some family of at most max_copies injective
/// maps into 0..universe-1 intersects to a graph isomorphic to h.
bool si_oracle_naive(const Graph& g, const Graph& h, int max_copies, int universe);

/// Identity plus one copy per vertex outside U moving it to a fresh label.
SiWitness witness_induced(const Graph& g, const VertexList& U);

/// One copy of h per vertex v of target, placing target through an embedding
/// induced at v. Throws PreconditionError naming the vertex whose embedding
/// fails validation.
SiWitness witness_from_local_embeddings(const Graph& h, const Graph& target,
                                        const std::vector<Embedding>& embeddings);

/// Transitivity: from G ->∩ M and M ->∩ F build G ->∩ F. Throws
/// PreconditionError when w2.host is not isomorphic to the result of w1.
SiWitness compose_witness(const SiWitness& w1, const SiWitness& w2);

/// Throws InvariantError with the diagnostic unless w verifies.
void require_verified(const SiWitness& w, const std::string& context);

}  // namespace sic
