#include "sic/solvers.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

#include "sic/canonical.hpp"
#include "sic/constructions.hpp"
#include "sic/error.hpp"
#include "sic/generators.hpp"
#include "sic/si.hpp"
#include "sic/structure.hpp"
#include "sic/treewidth.hpp"

namespace sic {

// ---------------------------------------------------------------------------
// Pipeline

namespace {

class Pipeline {
 public:
  explicit Pipeline(const WeightedGraph& wg) : wg_(wg) {}

  Score solve(const VertexList& s, TraceNode& node) {
    node.size = static_cast<int>(s.size());
    if (auto it = memo_.find(s); it != memo_.end()) {
      node.step = "memo";
      node.weight = it->second.weight;
      return it->second;
    }
    Score best = solve_fresh(s, node);
    node.weight = best.weight;
    memo_.emplace(s, best);
    return best;
  }

  // s induces a graph that is connected and co-connected.
  Score solve_prime(const VertexList& s, TraceNode& node) {
    node.size = static_cast<int>(s.size());
    const Graph h = induced_subgraph(wg_.graph, s);
    std::optional<VertexList> sep;
    for (const auto& m : minimal_separators(h)) {
      if (!is_clique(h, m)) continue;
      if (!sep || m.size() < sep->size() || (m.size() == sep->size() && m < *sep)) sep = m;
    }
    if (!sep) return atom(s, h, node);
    node.step = "clique-separator";
    // At most one separator vertex is in any independent set.
    VertexList cut;
    for (int v : *sep) cut.push_back(s[v]);
    node.children.emplace_back();
    Score best = solve(set_difference(s, cut), node.children.back());
    for (int v : cut) {
      VertexList closed = wg_.graph.neighbors(v);
      closed.push_back(v);
      node.children.emplace_back();
      Score with = combine(solve(set_difference(s, closed), node.children.back()), Score::of(wg_, {v}));
      if (better(with, best)) best = with;
    }
    node.weight = best.weight;
    return best;
  }

 private:
  Score solve_fresh(const VertexList& s, TraceNode& node) {
    if (s.empty()) {
      node.step = "empty";
      return {};
    }
    const Graph h = induced_subgraph(wg_.graph, s);
    if (is_complete(h)) {
      node.step = "complete";
      Score best;
      for (int v : s) {
        Score one = Score::of(wg_, {v});
        if (better(one, best)) best = one;
      }
      return best;
    }
    const MDTree md = modular_decomposition(h);
    const MDNode& root = md.nodes[md.root];
    std::vector<VertexList> parts;
    for (int c : root.children) {
      VertexList p;
      for (int v : md.nodes[c].vertices) p.push_back(s[v]);
      parts.push_back(p);
    }
    if (root.kind == MDKind::Parallel) {
      node.step = "parallel";
      Score sum;
      for (const auto& p : parts) {
        node.children.emplace_back();
        sum = combine(sum, solve(p, node.children.back()));
      }
      return sum;
    }
    if (root.kind == MDKind::Series) {
      node.step = "series";
      Score best;
      for (const auto& p : parts) {
        node.children.emplace_back();
        Score c = solve(p, node.children.back());
        if (better(c, best)) best = c;
      }
      return best;
    }
    node.step = "prime-quotient";
    if (std::all_of(parts.begin(), parts.end(), [](const VertexList& p) { return p.size() == 1; })) {
      node.children.emplace_back();
      return solve_prime(s, node.children.back());
    }
    // Each module is replaced by one vertex carrying its optimum.
    std::vector<Score> inner;
    std::vector<Weight> qw;
    for (const auto& p : parts) {
      node.children.emplace_back();
      inner.push_back(solve(p, node.children.back()));
      qw.push_back(inner.back().weight);
    }
    WeightedGraph q(root.quotient, qw);
    Pipeline sub(q);
    VertexList all(q.graph.order());
    for (int i = 0; i < q.graph.order(); ++i) all[i] = i;
    node.children.emplace_back();
    Score picked = sub.solve_prime(all, node.children.back());
    Score out;
    for (int i : picked.set) out = combine(out, inner[i]);
    return out;
  }

  Score atom(const VertexList& s, const Graph& h, TraceNode& node) {
    node.step = "tree-dp";
    std::vector<Weight> w;
    for (int v : s) w.push_back(wg_.weights[v]);
    TreewidthResult tw;
    try {
      tw = exact_treewidth(h);
    } catch (const GuardError& e) {
      std::string list;
      for (int v : s) list += " " + std::to_string(v);
      throw GuardError(std::string(e.what()) + "; atom of " + std::to_string(s.size()) + " vertices:" + list);
    }
    node.width = tw.width;
    Score local = mwis_treedp(WeightedGraph(h, w), tw.decomposition);
    VertexList mapped;
    for (int v : local.set) mapped.push_back(s[v]);
    Score out = Score::of(wg_, mapped);
    node.weight = out.weight;
    return out;
  }

  const WeightedGraph& wg_;
  std::map<VertexList, Score> memo_;
};

}  // namespace

MwisResult mwis(const WeightedGraph& wg) {
  Pipeline p(wg);
  MwisResult r;
  VertexList all(wg.graph.order());
  for (int v = 0; v < wg.graph.order(); ++v) all[v] = v;
  r.best = p.solve(all, r.trace);
  if (!is_independent(wg.graph, r.best.set) || r.best.weight != wg.weight_of(r.best.set))
    throw InvariantError("mwis: recomposed set fails its own check");
  return r;
}

int max_trace_width(const TraceNode& t) {
  int w = t.width;
  for (const auto& c : t.children) w = std::max(w, max_trace_width(c));
  return w;
}

std::string format_trace(const TraceNode& t) {
  std::ostringstream out;
  std::function<void(const TraceNode&, int)> walk = [&](const TraceNode& n, int depth) {
    out << std::string(2 * depth, ' ') << n.step << " size=" << n.size << " weight=" << format_weight(n.weight);
    if (n.width >= 0) out << " width=" << n.width;
    out << '\n';
    for (const auto& c : n.children) walk(c, depth + 1);
  };
  walk(t, 0);
  return out.str();
}

Score mwis_bruteforce(const WeightedGraph& wg) {
  const Graph& g = wg.graph;
  const int n = g.order();
  if (n > kBruteforceMaxOrder)
    throw GuardError("brute-force independent set is limited to " + std::to_string(kBruteforceMaxOrder) + " vertices");
  // Zero-weight vertices never improve a set.
  VertexList pos;
  for (int v = 0; v < n; ++v)
    if (wg.weights[v] > 0) pos.push_back(v);
  Score best, cur;
  std::vector<int> blocked(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == pos.size()) {
      if (better(cur, best)) best = cur;
      return;
    }
    const int v = pos[i];
    if (!blocked[v]) {
      Score saved = cur;
      cur.weight += wg.weights[v];
      cur.set.push_back(v);
      for (int u : g.neighbors(v)) ++blocked[u];
      rec(i + 1);
      for (int u : g.neighbors(v)) --blocked[u];
      cur = std::move(saved);
    }
    rec(i + 1);
  };
  rec(0);
  return best;
}

InducedMatching mim_bruteforce(const Graph& g) {
  const auto& es = g.edges();
  if (static_cast<int>(es.size()) > kMimMaxEdges)
    throw GuardError("brute-force induced matching is limited to " + std::to_string(kMimMaxEdges) + " edges");
  std::vector<Edge> best, cur;
  std::vector<int> blocked(g.order(), 0);
  auto touch = [&](int v, int d) {
    blocked[v] += d;
    for (int u : g.neighbors(v)) blocked[u] += d;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (cur.size() > best.size()) best = cur;
    if (cur.size() + (es.size() - i) <= best.size()) return;
    for (std::size_t j = i; j < es.size(); ++j) {
      auto [u, v] = es[j];
      if (blocked[u] || blocked[v]) continue;
      cur.push_back(es[j]);
      touch(u, 1);
      touch(v, 1);
      rec(j + 1);
      touch(u, -1);
      touch(v, -1);
      cur.pop_back();
    }
  };
  rec(0);
  return {best};
}

// ---------------------------------------------------------------------------
// Classes

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Induced: return "induced";
    case Relation::Subgraph: return "subgraph";
    case Relation::Si: return "si";
  }
  return "?";
}

bool occurs(const Graph& g, const Graph& f, Relation mode) {
  if (f.order() > g.order()) return false;
  switch (mode) {
    case Relation::Induced: return find_embedding(f, g, EmbedMode::Induced).has_value();
    case Relation::Subgraph: return find_embedding(f, g, EmbedMode::Subgraph).has_value();
    case Relation::Si: return si_oracle(g, f, SiOptions{5e7, false}).holds;
  }
  return false;
}

bool class_membership(const Graph& g, const ClassSpec& spec) {
  if (spec.forbidden.empty()) throw PreconditionError("class needs at least one forbidden graph");
  return std::none_of(spec.forbidden.begin(), spec.forbidden.end(),
                      [&](const Graph& f) { return occurs(g, f, spec.mode); });
}

ProbeReport class_probe(const std::vector<Graph>& m, int nmax) {
  if (nmax > kProbeMaxOrder) throw GuardError("class probe is limited to " + std::to_string(kProbeMaxOrder) + " vertices");
  if (m.empty()) throw PreconditionError("class probe needs at least one forbidden graph");
  ProbeReport rep;
  for (const Graph& g : graphs_up_to(nmax)) {
    ProbeRow row{g, canonical_key(g)};
    row.induced = class_membership(g, {m, Relation::Induced});
    row.subgraph = class_membership(g, {m, Relation::Subgraph});
    row.si = class_membership(g, {m, Relation::Si});
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::vector<std::string> probe_mismatches(const ProbeReport& rep, Relation column,
                                          const std::vector<Graph>& reference) {
  std::vector<std::string> out;
  for (const auto& row : rep.rows) {
    bool have = column == Relation::Induced ? row.induced : column == Relation::Subgraph ? row.subgraph : row.si;
    if (have != class_membership(row.g, {reference, Relation::Induced})) out.push_back(row.key);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tripods and S_k

std::optional<int> is_tripod_forest(const Graph& g) {
  for (const auto& c : components(g)) {
    Graph h = induced_subgraph(g, c);
    if (h.size() != h.order() - 1 || h.max_degree() > 3) return std::nullopt;
    int branch = 0;
    for (int v = 0; v < h.order(); ++v) branch += h.degree(v) == 3;
    if (branch > 1) return std::nullopt;
  }
  for (int t = 1;; ++t) {
    if (tripod_order(t) > Bits::kMaxBits)
      throw GuardError("tripod forest search exceeds the bitset range");
    if (tripod_order(t) < g.order()) continue;
    if (find_embedding(g, tripod_forest(t), EmbedMode::Induced)) return t;
  }
}

int girth(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
    dist[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push_back(y);
        } else if (y != parent[x]) {
          int len = dist[x] + dist[y] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

std::optional<std::string> sk_obstruction(const Graph& g, int k) {
  if (k < 3) throw PreconditionError("S_k needs k >= 3");
  const int c = girth(g);
  if (c > 0 && c <= k) return "C" + std::to_string(c);
  if (g.max_degree() >= 4) return std::string("H0");
  for (int i = 1; i <= k; ++i) {
    Graph h = h_graph(i);
    if (h.order() > g.order()) break;
    if (find_embedding(h, g, EmbedMode::Subgraph)) return "H" + std::to_string(i);
  }
  return std::nullopt;
}

bool sk_membership(const Graph& g, int k) { return !sk_obstruction(g, k).has_value(); }

DichotomyVerdict dichotomy_classify(const std::vector<Graph>& m) {
  if (m.empty()) throw PreconditionError("dichotomy needs at least one forbidden graph");
  DichotomyVerdict v;
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto t = is_tripod_forest(m[i]);
    if (t && (!v.poly || *t < v.t)) {
      v.poly = true;
      v.index = static_cast<int>(i);
      v.t = *t;
    }
  }
  if (v.poly) {
    Graph host = tripod_forest(v.t);
    v.embedding = find_embedding(m[v.index], host, EmbedMode::Induced);
    if (!v.embedding || !validate_embedding(m[v.index], host, *v.embedding))
      throw InvariantError("dichotomy: tripod embedding failed to validate");
    return v;
  }
  // Membership in S_k only shrinks as k grows, so the least common r is the
  // largest of the per-member thresholds.
  v.r = 3;
  for (const Graph& f : m) {
    int k = 3;
    while (sk_membership(f, k)) {
      if (++k > f.order() + 3) throw InvariantError("dichotomy: no S_k threshold found");
    }
    v.r = std::max(v.r, k);
  }
  for (const Graph& f : m) v.obstructions.push_back(*sk_obstruction(f, v.r));
  return v;
}

}  // namespace sic
