#pragma once

#include <functional>
#include <optional>
#include <string>

#include "sic/graph.hpp"

namespace sic {

enum class EmbedMode { Subgraph, Induced, InducedAt };

std::string to_string(EmbedMode m);

/// map[i] is the host vertex assigned to pattern vertex i. For InducedAt the
/// non-edge condition is enforced on pairs meeting `at`.
struct Embedding {
  VertexList map;
  EmbedMode mode = EmbedMode::Subgraph;
  VertexList at;
};

/// Colour refinement to a stable partition. Colour ids are assigned from
/// sorted signatures, so they are invariant under relabeling whenever the
/// initial colouring is.
std::vector<int> refine_colours(const Graph& g, std::vector<int> colours);

/// Exact check of an embedding; on failure `why` names the first bad pair.
bool validate_embedding(const Graph& pattern, const Graph& host, const Embedding& e,
                        std::string* why = nullptr);

/// Bijection g -> h (bij[v] is the image of v), or nothing.
std::optional<VertexList> is_isomorphic(const Graph& g, const Graph& h);

std::optional<Embedding> find_embedding(const Graph& pattern, const Graph& host, EmbedMode mode,
                                        const VertexList& at = {});

/// As find_embedding but stops after `node_budget` search nodes; `gave_up`
/// is set when the budget ran out before the search finished.
std::optional<Embedding> find_embedding_bounded(const Graph& pattern, const Graph& host,
                                                EmbedMode mode, const VertexList& at,
                                                long long node_budget, bool* gave_up);

/// Calls `visit` for every embedding (as a pattern->host map) until it
/// returns false. Returns the number of embeddings visited.
long long for_each_embedding(const Graph& pattern, const Graph& host, EmbedMode mode,
                             const std::function<bool(const VertexList&)>& visit);

}  // namespace sic
