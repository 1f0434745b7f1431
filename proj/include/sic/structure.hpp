#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sic/graph.hpp"
#include "sic/si.hpp"
#include "sic/treewidth.hpp"

namespace sic {

/// Classes of pairwise non-adjacent vertices with equal neighbourhoods,
/// ordered by smallest member.
std::vector<VertexList> false_twin_classes(const Graph& g);

/// Every vertex outside U is complete or anticomplete to U.
bool is_module(const Graph& g, const VertexList& u);

enum class MDKind { Leaf, Parallel, Series, Prime };
std::string to_string(MDKind k);

struct MDNode {
  MDKind kind = MDKind::Leaf;
  VertexList vertices;        // sorted
  std::vector<int> children;  // node indices, ordered by smallest vertex
  Graph quotient;             // on the children, in order
};

struct MDTree {
  std::vector<MDNode> nodes;
  int root = -1;
};

MDTree modular_decomposition(const Graph& g);
bool validate_md_tree(const Graph& g, const MDTree& t, std::string* why = nullptr);

VertexList cut_vertices(const Graph& g);
/// Vertex sets of the blocks (isolated vertices form their own block).
std::vector<VertexList> biconnected_components(const Graph& g);

/// U separates g: g - U has more components than one (the empty set counts
/// when g is disconnected).
bool is_cutset(const Graph& g, const VertexList& u);

/// All clique cutsets of size at most k, by size then lexicographically.
std::vector<VertexList> clique_cutsets_upto(const Graph& g, int k);

/// All minimal separators (close-neighbourhood generation). GuardError past
/// `cap` separators.
std::vector<VertexList> minimal_separators(const Graph& g, std::size_t cap = 200000);

struct AtomDecomposition {
  std::vector<VertexList> atoms;
  std::vector<VertexList> separators;  // in the order they were used
};

AtomDecomposition clique_separator_atoms(const Graph& g);

/// Pivoted Bron-Kerbosch; each clique sorted, list sorted.
std::vector<VertexList> maximal_cliques(const Graph& g);
int clique_number(const Graph& g);

struct Biclique {
  VertexList a, b;  // a holds the smallest vertex of a ∪ b
};

/// Induced complete bipartite subgraphs, with both parts nonempty, to which
/// no single vertex can be added; only those with one part of size >= pmin
/// and the other >= qmin are returned.
std::vector<Biclique> maximal_induced_bicliques(const Graph& g, int pmin = 1, int qmin = 1);

// ---------------------------------------------------------------------------
// Certificates

struct ModuleCert {
  std::vector<Biclique> bicliques;  // every large maximal biclique; each union is a module
};
struct KrFreeCert {
  int r = 0;
  int clique_number = 0;
  std::size_t cliques_checked = 0;
};
struct CompleteCert {};
struct TwBoundCert {
  int width = 0;
  TreeDecomposition decomposition;
};
struct Refutation {
  std::string reason;  // which proof case produced the witness
  SiWitness witness;   // g intersects to tS_{t,t,t}
};

using Certificate = std::variant<ModuleCert, KrFreeCert, CompleteCert, TwBoundCert, Refutation>;

std::string certificate_kind(const Certificate& c);

/// Re-checks a certificate against g and t with independent validators.
bool check_certificate(const Graph& g, int t, const Certificate& c, std::string* why = nullptr);

/// Large maximal bicliques are modules, or a refutation. g must be connected
/// without cut vertices.
Certificate certify_theorem31(const Graph& g, int t);

/// certify_theorem31 on each block (on induced subgraphs) that has at least
/// two vertices; refutations are lifted back to g.
std::vector<Certificate> certify_theorem31_blocks(const Graph& g, int t);

/// Complete, K_r-free with r = 3t^2+t+2, or a refutation. g must have no
/// clique cutset of size at most 2.
Certificate certify_theorem37(const Graph& g, int t);

struct Theorem39Report {
  bool twin_free = false;
  bool no_small_clique_cutset = false;
  bool complete = false;
  bool hypotheses() const { return twin_free && no_small_clique_cutset; }
  std::optional<int> width;           // exact, when hypotheses hold and g is incomplete
  std::optional<bool> has_kr;         // K_r as a subgraph
  std::optional<bool> has_krr;        // K_{r,r} as an induced subgraph
  std::optional<bool> has_linegraph;  // L(tS_{t+1,t+1,t}) as an induced subgraph
  int r = 0;
  std::vector<std::string> notes;
};

Theorem39Report report_theorem39(const Graph& g, int t);

}  // namespace sic
