#include "sic/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "sic/constructions.hpp"
#include "sic/error.hpp"
#include "sic/generators.hpp"
#include "sic/search.hpp"

namespace sic {

std::vector<VertexList> false_twin_classes(const Graph& g) {
  std::map<VertexList, VertexList> by_nbhd;
  for (int v = 0; v < g.order(); ++v) by_nbhd[g.neighbors(v)].push_back(v);
  std::vector<VertexList> out;
  for (auto& [_, cls] : by_nbhd) out.push_back(cls);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_module(const Graph& g, const VertexList& u) {
  auto in = membership(g.order(), u);
  for (int x = 0; x < g.order(); ++x) {
    if (in[x]) continue;
    int seen = 0;
    for (int y : u) seen += g.adjacent(x, y);
    if (seen != 0 && seen != static_cast<int>(u.size())) return false;
  }
  return true;
}

std::string to_string(MDKind k) {
  switch (k) {
    case MDKind::Leaf: return "leaf";
    case MDKind::Parallel: return "parallel";
    case MDKind::Series: return "series";
    case MDKind::Prime: return "prime";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Modular decomposition

namespace {

// Smallest module of g[s] containing `seed`.
VertexList module_closure(const Graph& g, const VertexList& s, VertexList seed) {
  auto in = membership(g.order(), seed);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int w : s) {
      if (in[w]) continue;
      int seen = 0;
      for (int y : seed) seen += g.adjacent(w, y);
      if (seen != 0 && seen != static_cast<int>(seed.size())) {
        in[w] = true;
        seed.push_back(w);
        grew = true;
      }
    }
  }
  return sorted_unique(seed);
}

std::vector<VertexList> components_within(const Graph& g, const VertexList& s, bool complemented) {
  auto in = membership(g.order(), s);
  std::vector<bool> seen(g.order(), false);
  std::vector<VertexList> out;
  for (int start : s) {
    if (seen[start]) continue;
    VertexList comp{start};
    seen[start] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : s)
        if (!seen[w] && in[w] && w != comp[i] && g.adjacent(comp[i], w) != complemented) {
          seen[w] = true;
          comp.push_back(w);
        }
    out.push_back(sorted_unique(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph quotient_of(const Graph& g, const std::vector<VertexList>& parts) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (g.adjacent(parts[i][0], parts[j][0])) es.emplace_back(i, j);
  return Graph(static_cast<int>(parts.size()), std::move(es));
}

int build_md(const Graph& g, const VertexList& s, MDTree& t) {
  MDNode node;
  node.vertices = s;
  if (s.size() == 1) {
    t.nodes.push_back(std::move(node));
    return static_cast<int>(t.nodes.size()) - 1;
  }
  std::vector<VertexList> parts = components_within(g, s, false);
  if (parts.size() > 1) {
    node.kind = MDKind::Parallel;
  } else if (parts = components_within(g, s, true); parts.size() > 1) {
    node.kind = MDKind::Series;
  } else {
    // Both g[s] and its complement are connected: the maximal proper
    // modules are disjoint and partition s.
    node.kind = MDKind::Prime;
    parts.clear();
    std::vector<bool> placed(g.order(), false);
    for (int v : s) {
      if (placed[v]) continue;
      VertexList m{v};
      for (int u : s) {
        if (u == v) continue;
        VertexList c = module_closure(g, s, {v, u});
        if (c.size() < s.size()) m = set_union(m, c);
      }
      for (int x : m) placed[x] = true;
      parts.push_back(m);
    }
    std::sort(parts.begin(), parts.end());
  }
  node.quotient = quotient_of(g, parts);
  for (const auto& p : parts) node.children.push_back(build_md(g, p, t));
  t.nodes.push_back(std::move(node));
  return static_cast<int>(t.nodes.size()) - 1;
}

}  // namespace

MDTree modular_decomposition(const Graph& g) {
  MDTree t;
  if (g.order() == 0) return t;
  VertexList all(g.order());
  for (int v = 0; v < g.order(); ++v) all[v] = v;
  t.root = build_md(g, all, t);
  return t;
}

bool validate_md_tree(const Graph& g, const MDTree& t, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (g.order() == 0) return t.nodes.empty() ? true : fail("nonempty tree for the empty graph");
  if (t.root < 0 || t.nodes[t.root].vertices.size() != static_cast<std::size_t>(g.order()))
    return fail("root does not hold every vertex");
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const MDNode& n = t.nodes[i];
    const std::string at = "node " + std::to_string(i) + ": ";
    if (n.kind == MDKind::Leaf) {
      if (n.vertices.size() != 1 || !n.children.empty()) return fail(at + "malformed leaf");
      continue;
    }
    if (n.children.size() < 2) return fail(at + "internal node with fewer than two children");
    VertexList all;
    std::vector<VertexList> parts;
    for (int c : n.children) {
      const auto& cv = t.nodes[c].vertices;
      parts.push_back(cv);
      all.insert(all.end(), cv.begin(), cv.end());
      // cv must be a module of g[n.vertices].
      for (int x : set_difference(n.vertices, cv)) {
        int seen = 0;
        for (int y : cv) seen += g.adjacent(x, y);
        if (seen != 0 && seen != static_cast<int>(cv.size())) return fail(at + "child is not a module");
      }
    }
    std::sort(all.begin(), all.end());
    if (all != n.vertices || std::adjacent_find(all.begin(), all.end()) != all.end())
      return fail(at + "children do not partition the node");
    Graph q = quotient_of(g, parts);
    if (!(q == n.quotient)) return fail(at + "stored quotient is wrong");
    const long long k = q.order();
    if (n.kind == MDKind::Parallel && q.size() != 0) return fail(at + "parallel quotient has edges");
    if (n.kind == MDKind::Series && q.size() != k * (k - 1) / 2) return fail(at + "series quotient is not complete");
    if (n.kind == MDKind::Prime) {
      VertexList qv(k);
      for (int v = 0; v < k; ++v) qv[v] = v;
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          if (module_closure(q, qv, {a, b}).size() != static_cast<std::size_t>(k))
            return fail(at + "prime quotient has a nontrivial module");
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Cut vertices and blocks

namespace {

struct BlockFinder {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<Edge> stack;
  std::vector<bool> cut;
  std::vector<VertexList> blocks;
  int clock = 0;

  explicit BlockFinder(const Graph& g_)
      : g(g_), disc(g_.order(), -1), low(g_.order(), 0), cut(g_.order(), false) {}

  void dfs(int u, int parent) {
    disc[u] = low[u] = clock++;
    int kids = 0;
    for (int v : g.neighbors(u)) {
      if (disc[v] < 0) {
        ++kids;
        stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if ((parent < 0 && kids > 1) || (parent >= 0 && low[v] >= disc[u])) cut[u] = true;
        if (low[v] >= disc[u]) {
          VertexList block;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e.first);
            block.push_back(e.second);
            if (e == Edge{u, v}) break;
          }
          blocks.push_back(sorted_unique(block));
        }
      } else if (v != parent && disc[v] < disc[u]) {
        stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  }

  void run() {
    for (int v = 0; v < g.order(); ++v)
      if (disc[v] < 0) {
        dfs(v, -1);
        if (g.degree(v) == 0) blocks.push_back({v});
      }
    std::sort(blocks.begin(), blocks.end());
  }
};

}  // namespace

VertexList cut_vertices(const Graph& g) {
  BlockFinder f(g);
  f.run();
  VertexList out;
  for (int v = 0; v < g.order(); ++v)
    if (f.cut[v]) out.push_back(v);
  return out;
}

std::vector<VertexList> biconnected_components(const Graph& g) {
  BlockFinder f(g);
  f.run();
  return f.blocks;
}

// ---------------------------------------------------------------------------
// Separators

bool is_cutset(const Graph& g, const VertexList& u) {
  return components_avoiding(g, membership(g.order(), u)).size() > 1;
}

std::vector<VertexList> clique_cutsets_upto(const Graph& g, int k) {
  std::vector<VertexList> out;
  VertexList cur;
  // Cliques by increasing size, each extended only by larger vertices.
  std::function<void(int)> grow = [&](int from) {
    if (is_cutset(g, cur)) out.push_back(cur);
    if (static_cast<int>(cur.size()) == k) return;
    for (int v = from; v < g.order(); ++v) {
      bool ok = std::all_of(cur.begin(), cur.end(), [&](int u) { return g.adjacent(u, v); });
      if (!ok) continue;
      cur.push_back(v);
      grow(v + 1);
      cur.pop_back();
    }
  };
  if (k >= 0) grow(0);
  std::sort(out.begin(), out.end(), [](const VertexList& a, const VertexList& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

namespace {

// Neighbourhood of each component of g - removed.
std::vector<VertexList> component_neighbourhoods(const Graph& g, const std::vector<bool>& removed) {
  std::vector<VertexList> out;
  for (const auto& c : components_avoiding(g, removed)) {
    VertexList nb;
    for (int v : c)
      for (int w : g.neighbors(v))
        if (removed[w]) nb.push_back(w);
    out.push_back(sorted_unique(nb));
  }
  return out;
}

bool is_minimal_separator(const Graph& g, const VertexList& s) {
  auto removed = membership(g.order(), s);
  int full = 0;
  for (const auto& nb : component_neighbourhoods(g, removed)) full += nb == s;
  return full >= 2;
}

}  // namespace

std::vector<VertexList> minimal_separators(const Graph& g, std::size_t cap) {
  std::set<VertexList> found;
  std::vector<VertexList> queue;
  auto offer = [&](const VertexList& s) {
    if (s.empty() || found.count(s) || !is_minimal_separator(g, s)) return;
    if (found.size() >= cap) throw GuardError("more than " + std::to_string(cap) + " minimal separators");
    found.insert(s);
    queue.push_back(s);
  };
  for (int v = 0; v < g.order(); ++v) {
    VertexList closed = g.neighbors(v);
    closed.push_back(v);
    for (const auto& nb : component_neighbourhoods(g, membership(g.order(), closed))) offer(nb);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const VertexList s = queue[i];
    for (int x : s) {
      VertexList grown = set_union(s, g.neighbors(x));
      for (const auto& nb : component_neighbourhoods(g, membership(g.order(), grown))) offer(nb);
    }
  }
  return {found.begin(), found.end()};
}

AtomDecomposition clique_separator_atoms(const Graph& g) {
  AtomDecomposition out;
  std::vector<VertexList> atoms;
  std::function<void(const VertexList&)> split = [&](const VertexList& piece) {
    Graph h = induced_subgraph(g, piece);
    auto comps = components(h);
    if (comps.size() > 1) {
      out.separators.push_back({});
      for (const auto& c : comps) {
        VertexList sub;
        for (int v : c) sub.push_back(piece[v]);
        split(sub);
      }
      return;
    }
    std::optional<VertexList> best;
    for (const auto& s : minimal_separators(h)) {
      if (!is_clique(h, s)) continue;
      if (!best || s.size() < best->size() || (s.size() == best->size() && s < *best)) best = s;
    }
    if (!best) {
      atoms.push_back(piece);
      return;
    }
    VertexList sep;
    for (int v : *best) sep.push_back(piece[v]);
    out.separators.push_back(sep);
    auto removed = membership(h.order(), *best);
    for (const auto& c : components_avoiding(h, removed)) {
      VertexList sub;
      for (int v : c) {
        sub.push_back(piece[v]);
        for (int w : h.neighbors(v))
          if (removed[w]) sub.push_back(piece[w]);
      }
      split(sorted_unique(sub));
    }
  };
  if (g.order() > 0) {
    VertexList all(g.order());
    for (int v = 0; v < g.order(); ++v) all[v] = v;
    split(all);
  }
  // Drop atoms contained in other atoms.
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  for (const auto& a : atoms) {
    bool inside = false;
    for (const auto& b : atoms)
      if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end())) inside = true;
    if (!inside) out.atoms.push_back(a);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cliques and bicliques

std::vector<VertexList> maximal_cliques(const Graph& g) {
  const auto rows = g.rows();
  std::vector<VertexList> out;
  std::function<void(Bits, Bits, Bits)> bk = [&](Bits r, Bits p, Bits x) {
    if (p.none() && x.none()) {
      out.push_back(r.to_vector());
      return;
    }
    int pivot = -1, best = -1;
    for (int u : p | x) {
      int c = (p & rows[u]).count();
      if (c > best) best = c, pivot = u;
    }
    for (int v : p - rows[pivot]) {
      Bits rv = r;
      rv.set(v);
      bk(rv, p & rows[v], x & rows[v]);
      p.reset(v);
      x.set(v);
    }
  };
  if (g.order() > 0) bk(Bits(), Bits::range(g.order()), Bits());
  std::sort(out.begin(), out.end());
  return out;
}

int clique_number(const Graph& g) {
  int best = 0;
  for (const auto& c : maximal_cliques(g)) best = std::max<int>(best, static_cast<int>(c.size()));
  return best;
}

std::vector<Biclique> maximal_induced_bicliques(const Graph& g, int pmin, int qmin) {
  const int n = g.order();
  const auto rows = g.rows();
  std::vector<Biclique> out;
  const int lo = std::min(pmin, qmin), hi = std::max(pmin, qmin);
  auto sizes_ok = [&](int a, int b) { return std::min(a, b) >= lo && std::max(a, b) >= hi; };
  // Decide vertices in order: into A, into B, or out. candA holds the
  // remaining vertices that could still join A, candB likewise.
  std::function<void(int, Bits, Bits, Bits, Bits)> rec = [&](int i, Bits a, Bits b, Bits ca, Bits cb) {
    const Bits rest = Bits::range(n) - Bits::range(i);
    const int pa = a.count() + (ca & rest).count(), pb = b.count() + (cb & rest).count();
    if (!sizes_ok(pa, pb)) return;
    if (i == n) {
      if (a.none() || b.none()) return;
      for (int w = 0; w < n; ++w) {
        if (a.test(w) || b.test(w)) continue;
        if (ca.test(w) || cb.test(w)) return;  // w could be added
      }
      out.push_back({a.to_vector(), b.to_vector()});
      return;
    }
    const bool empty = a.none() && b.none();
    if (ca.test(i)) {
      Bits a2 = a;
      a2.set(i);
      rec(i + 1, a2, b, ca - rows[i] - Bits::single(i), cb & rows[i]);
    }
    if (!empty && cb.test(i)) {
      Bits b2 = b;
      b2.set(i);
      rec(i + 1, a, b2, ca & rows[i], cb - rows[i] - Bits::single(i));
    }
    rec(i + 1, a, b, ca, cb);
  };
  if (n > 0) rec(0, Bits(), Bits(), Bits::range(n), Bits::range(n));
  return out;
}

// ---------------------------------------------------------------------------
// Certificates

std::string certificate_kind(const Certificate& c) {
  struct {
    std::string operator()(const ModuleCert&) const { return "module"; }
    std::string operator()(const KrFreeCert&) const { return "kr-free"; }
    std::string operator()(const CompleteCert&) const { return "complete"; }
    std::string operator()(const TwBoundCert&) const { return "tw-bound"; }
    std::string operator()(const Refutation&) const { return "refutation"; }
  } v;
  return std::visit(v, c);
}

bool check_certificate(const Graph& g, int t, const Certificate& c, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (auto* m = std::get_if<ModuleCert>(&c)) {
    for (const auto& bc : m->bicliques) {
      if (!is_independent(g, bc.a) || !is_independent(g, bc.b)) return fail("biclique part is not independent");
      for (int x : bc.a)
        for (int y : bc.b)
          if (!g.adjacent(x, y)) return fail("biclique parts are not complete to each other");
      if (!is_module(g, set_union(bc.a, bc.b))) return fail("biclique union is not a module");
    }
    return true;
  }
  if (auto* k = std::get_if<KrFreeCert>(&c)) {
    if (clique_number(g) >= k->r) return fail("graph contains K_r");
    return true;
  }
  if (std::holds_alternative<CompleteCert>(c)) return is_complete(g) ? true : fail("graph is not complete");
  if (auto* tw = std::get_if<TwBoundCert>(&c)) {
    std::string d;
    if (!validate_decomposition(g, tw->decomposition, &d)) return fail(d);
    if (tw->decomposition.width() > tw->width) return fail("decomposition is wider than claimed");
    return true;
  }
  const auto& r = std::get<Refutation>(c);
  if (!(r.witness.host == g)) return fail("refutation witness is for another graph");
  if (!is_isomorphic(r.witness.claimed, tripod_forest(t))) return fail("refutation does not claim tS_{t,t,t}");
  std::string d;
  if (!verify_witness(r.witness, &d)) return fail(d);
  return true;
}

namespace {

VertexList neighbours_in(const Graph& g, int v, const VertexList& set) {
  VertexList out;
  for (int x : set)
    if (g.adjacent(v, x)) out.push_back(x);
  return out;
}

// Lowest s vertices of part, always including the members of `must` that lie
// in part.
VertexList shrink_part(const VertexList& part, const VertexList& must, int s) {
  VertexList out = set_intersection(part, must);
  for (int u : part)
    if (static_cast<int>(out.size()) < s && !std::binary_search(out.begin(), out.end(), u)) {
      out.push_back(u);
      std::sort(out.begin(), out.end());
    }
  return out;
}

struct Local {
  Graph h;
  std::vector<int> pos;
};

Local local(const Graph& g, const VertexList& u) {
  Local l{induced_subgraph(g, u), std::vector<int>(g.order(), -1)};
  for (std::size_t i = 0; i < u.size(); ++i) l.pos[u[i]] = static_cast<int>(i);
  return l;
}

VertexList to_local(const Local& l, const VertexList& vs) {
  VertexList out;
  for (int v : vs) out.push_back(l.pos.at(v));
  return out;
}

Refutation refute(const Graph& g, const VertexList& u, const SiWitness& local_witness, std::string reason) {
  SiWitness w = compose_witness(witness_induced(g, u), local_witness);
  require_verified(w, reason);
  return {std::move(reason), std::move(w)};
}

void require_no_cut_vertex(const Graph& g, const std::string& who) {
  if (!is_connected(g)) throw PreconditionError(who + ": graph must be connected");
  auto cuts = cut_vertices(g);
  if (!cuts.empty()) throw PreconditionError(who + ": graph has cut vertex " + std::to_string(cuts[0]));
}

}  // namespace

Certificate certify_theorem31(const Graph& g, int t) {
  const std::string who = "theorem31";
  if (t < 1) throw PreconditionError(who + ": t must be positive");
  require_no_cut_vertex(g, who);
  const int s = tripod_order(t);
  auto bicliques = maximal_induced_bicliques(g, s + 1, s + 1);
  for (const auto& bc : bicliques) {
    const VertexList ab = set_union(bc.a, bc.b);
    VertexList mixed;
    for (int x = 0; x < g.order(); ++x) {
      if (std::binary_search(ab.begin(), ab.end(), x)) continue;
      auto nx = neighbours_in(g, x, ab);
      if (!nx.empty() && nx.size() != ab.size()) mixed.push_back(x);
    }
    // Case 1: two or more neighbours in the biclique.
    for (int x : mixed) {
      if (neighbours_in(g, x, ab).size() < 2) continue;
      VertexList u = set_union(ab, {x});
      Local l = local(g, u);
      auto r = witness_biclique_plus_vertex(l.h, to_local(l, bc.a), to_local(l, bc.b), l.pos[x], s + 1);
      SiWitness w = compose_witness(r.witness, witness_xy_to_tripods(r.witness.claimed, t));
      return refute(g, u, w, who + " case 1 at vertex " + std::to_string(x) + " via " + r.reached + "_p");
    }
    // Case 2: exactly one neighbour y; walk from x to the rest of the
    // biclique avoiding y, and keep the part of the walk after its last
    // contact with y.
    for (int x : mixed) {
      const int y = neighbours_in(g, x, ab)[0];
      std::vector<bool> target = membership(g.order(), set_difference(ab, {y}));
      std::vector<bool> blocked(g.order(), false);
      blocked[y] = true;
      VertexList p = shortest_path(g, x, target, blocked);
      if (p.size() < 3) throw InvariantError(who + ": no path around the single neighbour");
      const int k = static_cast<int>(p.size()) - 1;
      int j = 0;
      for (int i = 0; i <= k - 2; ++i)
        if (g.adjacent(p[i], y)) j = i;
      VertexList c(p.begin() + j, p.begin() + k);
      VertexList must{y, p[k]};
      VertexList a0 = shrink_part(bc.a, must, s), b0 = shrink_part(bc.b, must, s);
      VertexList u = set_union(set_union(a0, b0), c);
      Local l = local(g, u);
      BicliquePathInstance inst{l.h, to_local(l, a0), to_local(l, b0), to_local(l, c), t};
      return refute(g, u, witness_biclique_path(inst), who + " case 2 at vertex " + std::to_string(x));
    }
  }
  return ModuleCert{bicliques};
}

std::vector<Certificate> certify_theorem31_blocks(const Graph& g, int t) {
  std::vector<Certificate> out;
  for (const auto& block : biconnected_components(g)) {
    if (block.size() < 2) continue;
    Local l = local(g, block);
    Certificate c = certify_theorem31(l.h, t);
    if (auto* r = std::get_if<Refutation>(&c)) {
      out.push_back(refute(g, block, r->witness, r->reason + " in block"));
    } else {
      // Map biclique labels back to g.
      auto& m = std::get<ModuleCert>(c);
      for (auto& bc : m.bicliques) {
        for (int& v : bc.a) v = block[v];
        for (int& v : bc.b) v = block[v];
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

Certificate certify_theorem37(const Graph& g, int t) {
  const std::string who = "theorem37";
  if (t < 1) throw PreconditionError(who + ": t must be positive");
  auto cutsets = clique_cutsets_upto(g, 2);
  if (!cutsets.empty()) {
    std::string s;
    for (int v : cutsets[0]) s += " " + std::to_string(v);
    throw PreconditionError(who + ": graph has a clique cutset of size at most 2: {" + s + " }");
  }
  if (is_complete(g)) return CompleteCert{};
  const int s = tripod_order(t), r = s + 2;
  auto cliques = maximal_cliques(g);
  const VertexList* big = nullptr;
  int omega = 0;
  for (const auto& c : cliques) {
    omega = std::max<int>(omega, static_cast<int>(c.size()));
    if (!big && static_cast<int>(c.size()) >= r) big = &c;
  }
  if (!big) return KrFreeCert{r, omega, cliques.size()};
  const VertexList& a = *big;
  const VertexList outside = set_difference([&] {
    VertexList all(g.order());
    for (int v = 0; v < g.order(); ++v) all[v] = v;
    return all;
  }(), a);

  // Case 1: a vertex with three or more neighbours in the clique.
  for (int w : outside) {
    auto nw = neighbours_in(g, w, a);
    if (nw.size() < 3) continue;
    VertexList u = set_union(a, {w});
    Local l = local(g, u);
    const VertexList la = to_local(l, a);
    const int lw = l.pos[w];
    VertexList keep = to_local(l, {nw[0], nw[1], nw[2]});
    SiWitness peel = witness_peel(l.h, la, {}, lw, keep);
    CliqueThreePathInstance inst{peel.claimed, la, lw, {{lw, keep[0]}, {lw, keep[1]}, {lw, keep[2]}}, t};
    SiWitness w2 = compose_witness(peel, witness_clique_three_paths(inst));
    return refute(g, u, w2, who + " case 1 at vertex " + std::to_string(w));
  }
  // Case 2: a vertex with exactly two neighbours.
  for (int w : outside) {
    auto nw = neighbours_in(g, w, a);
    if (nw.size() != 2) continue;
    const int y1 = nw[0], y2 = nw[1];
    std::vector<bool> blocked = membership(g.order(), nw);
    VertexList path = shortest_path(g, w, membership(g.order(), set_difference(a, nw)), blocked);
    if (path.size() < 3) throw InvariantError(who + ": no path from the two-neighbour vertex");
    const int y3 = path.back(), z = path[path.size() - 2];
    VertexList clique = a;
    for (int y : neighbours_in(g, z, set_difference(a, {y1, y2, y3}))) {
      clique = set_difference(a, {y});
      break;
    }
    VertexList u = set_union(clique, path);
    Local l = local(g, u);
    CliqueThreePathInstance inst{l.h, to_local(l, clique), l.pos[w],
                                 {to_local(l, {w, y1}), to_local(l, {w, y2}), to_local(l, path)}, t};
    return refute(g, u, witness_clique_three_paths(inst), who + " case 2 at vertex " + std::to_string(w));
  }
  // Case 3: every outside vertex has at most one neighbour. The shortest
  // path leaving and re-entering the clique closes a chordless cycle.
  std::optional<VertexList> cycle;
  for (int u : outside) {
    auto nu = neighbours_in(g, u, a);
    if (nu.size() != 1) continue;
    std::vector<bool> blocked(g.order(), false);
    blocked[nu[0]] = true;
    VertexList p = shortest_path(g, u, membership(g.order(), set_difference(a, nu)), blocked);
    if (p.empty()) continue;
    p.insert(p.begin(), nu[0]);
    if (!cycle || p.size() < cycle->size() || (p.size() == cycle->size() && p < *cycle)) cycle = p;
  }
  if (!cycle) throw InvariantError(who + ": no path between two clique vertices");
  const VertexList& pc = *cycle;
  const int y1 = pc.front(), y2 = pc.back();
  VertexList inner(pc.begin() + 1, pc.end() - 1);
  std::vector<bool> blocked(g.order(), false);
  blocked[y1] = blocked[y2] = true;
  VertexList p2 = shortest_path_between(g, membership(g.order(), inner),
                                        membership(g.order(), set_difference(a, {y1, y2})), blocked);
  if (p2.size() < 2) throw InvariantError(who + ": no second path to the clique");
  const int w = p2.front();
  const auto at = std::find(pc.begin(), pc.end(), w) - pc.begin();
  VertexList q1(pc.rend() - at - 1, pc.rend());  // w back to y1
  VertexList q2(pc.begin() + at, pc.end());      // w on to y2
  VertexList u = set_union(set_union(a, pc), p2);
  Local l = local(g, u);
  CliqueThreePathInstance inst{l.h, to_local(l, a), l.pos[w], {to_local(l, q1), to_local(l, q2), to_local(l, p2)}, t};
  return refute(g, u, witness_clique_three_paths(inst), who + " case 3 at vertex " + std::to_string(w));
}

Theorem39Report report_theorem39(const Graph& g, int t) {
  Theorem39Report rep;
  rep.r = tripod_order(t) + 2;
  rep.complete = is_complete(g);
  rep.twin_free = false_twin_classes(g).size() == static_cast<std::size_t>(g.order());
  rep.no_small_clique_cutset = clique_cutsets_upto(g, 2).empty();
  if (!rep.twin_free) rep.notes.push_back("false twins present");
  if (!rep.no_small_clique_cutset) rep.notes.push_back("clique cutset of size at most 2 present");
  if (!rep.hypotheses() || rep.complete) return rep;
  if (g.order() <= kExactTreewidthMaxOrder) {
    rep.width = exact_treewidth(g).width;
  } else {
    rep.width = tw_upper_bound(g).width;
    rep.notes.push_back("width is a min-fill upper bound (graph above exact treewidth range)");
  }
  rep.has_kr = clique_number(g) >= rep.r;
  if (g.order() < 2 * rep.r) {
    rep.has_krr = false;
    rep.notes.push_back("K_{r,r} check vacuous: fewer than 2r vertices");
  } else {
    rep.has_krr = find_embedding(biclique(rep.r, rep.r), g, EmbedMode::Induced).has_value();
  }
  Graph lg = line_graph(spiders(t, t + 1, t + 1, t));
  rep.has_linegraph = g.order() >= lg.order() && find_embedding(lg, g, EmbedMode::Induced).has_value();
  return rep;
}

}  // namespace sic
