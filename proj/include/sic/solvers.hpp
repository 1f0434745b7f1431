#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sic/graph.hpp"
#include "sic/search.hpp"
#include "sic/weight.hpp"

namespace sic {

// ---------------------------------------------------------------------------
// Maximum weight independent set

/// One reduction step of the pipeline. `step` is one of complete, parallel,
/// series, prime-quotient, clique-separator, tree-dp, memo.
struct TraceNode {
  std::string step;
  int size = 0;
  int width = -1;  // tree-dp leaves only
  Weight weight = 0;
  std::vector<TraceNode> children;
};

struct MwisResult {
  Score best;
  TraceNode trace;
};

/// Modular decomposition, then clique separators, then tree DP on atoms.
/// Exact on every input; GuardError if an atom is too large for exact
/// treewidth.
MwisResult mwis(const WeightedGraph& wg);

/// Largest tree-dp width in a trace (-1 if none).
int max_trace_width(const TraceNode& t);
/// Trace as indented lines "step size=... weight=..." for reports.
std::string format_trace(const TraceNode& t);

inline constexpr int kBruteforceMaxOrder = 22;
inline constexpr int kMimMaxEdges = 24;

/// Exhaustive optimum; ties go to the Score order (fewer vertices, then the
/// lexicographically smaller set).
Score mwis_bruteforce(const WeightedGraph& wg);

struct InducedMatching {
  std::vector<Edge> edges;  // sorted
};

/// Largest set of edges with no shared endpoint and no edge joining two of
/// them; lexicographically smallest among the largest.
InducedMatching mim_bruteforce(const Graph& g);

// ---------------------------------------------------------------------------
// Classes defined by forbidden graphs

enum class Relation { Induced, Subgraph, Si };
std::string to_string(Relation r);

struct ClassSpec {
  std::vector<Graph> forbidden;
  Relation mode = Relation::Induced;
};

/// f occurs in g under the relation.
bool occurs(const Graph& g, const Graph& f, Relation mode);
bool class_membership(const Graph& g, const ClassSpec& spec);

struct ProbeRow {
  Graph g;
  std::string key;  // canonical graph6
  bool induced = false, subgraph = false, si = false;
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
};

inline constexpr int kProbeMaxOrder = 7;

/// Memberships of every class on 1..nmax vertices in Free(M), SubgraphFree(M)
/// and SiFree(M).
ProbeReport class_probe(const std::vector<Graph>& m, int nmax);

/// Rows where the chosen column differs from membership in Free(reference).
std::vector<std::string> probe_mismatches(const ProbeReport& rep, Relation column,
                                          const std::vector<Graph>& reference);

// ---------------------------------------------------------------------------
// Tripods and the S_k classes

/// Minimal t with g an induced subgraph of tS_{t,t,t}, if every component is
/// a path or a subdivided claw.
std::optional<int> is_tripod_forest(const Graph& g);

/// Reason g is outside S_k (short cycle, degree four, or some H_i with
/// i <= k as a subgraph); nullopt when g is in S_k.
std::optional<std::string> sk_obstruction(const Graph& g, int k);
bool sk_membership(const Graph& g, int k);

/// Length of a shortest cycle, 0 for forests.
int girth(const Graph& g);

struct DichotomyVerdict {
  bool poly = false;
  int index = -1;                    // the tripod forest in M (poly)
  int t = 0;                         // poly
  std::optional<Embedding> embedding;  // of M[index] into tS_{t,t,t}
  int r = 0;                         // hard
  std::vector<std::string> obstructions;  // hard: one per member, at r
};

DichotomyVerdict dichotomy_classify(const std::vector<Graph>& m);

}  // namespace sic
