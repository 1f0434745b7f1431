#include "sic/constructions.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "sic/error.hpp"
#include "sic/generators.hpp"

namespace sic {

int tripod_order(int t) { return 3 * t * t + t; }

namespace {

[[noreturn]] void violated(const std::string& lemma, int condition, const std::string& what) {
  throw PreconditionError(lemma + ": condition " + std::to_string(condition) + " violated: " + what);
}

bool complete_between(const Graph& g, const VertexList& a, const VertexList& b) {
  for (int x : a)
    for (int y : b)
      if (!g.adjacent(x, y)) return false;
  return true;
}

bool anticomplete_between(const Graph& g, const VertexList& a, const VertexList& b) {
  for (int x : a)
    for (int y : b)
      if (g.adjacent(x, y)) return false;
  return true;
}

VertexList neighbours_in(const Graph& g, int v, const VertexList& set) {
  VertexList out;
  for (int x : set)
    if (g.adjacent(v, x)) out.push_back(x);
  return out;
}

bool disjoint_cover(int n, const std::vector<const VertexList*>& parts) {
  std::vector<int> hits(n, 0);
  for (const auto* p : parts)
    for (int v : *p) {
      if (v < 0 || v >= n) return false;
      ++hits[v];
    }
  return std::all_of(hits.begin(), hits.end(), [](int c) { return c == 1; });
}

// Positions of `u` (sorted) inside induced_subgraph(g, u).
std::vector<int> positions(int n, const VertexList& u) {
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < u.size(); ++i) pos[u[i]] = static_cast<int>(i);
  return pos;
}

VertexList mapped(const std::vector<int>& pos, const VertexList& vs) {
  VertexList out;
  for (int v : vs) out.push_back(pos.at(v));
  return out;
}

// Copy of h placing embedding e of the target onto labels 0..m-1; every other
// vertex of h gets a label of block `block`, private to this copy.
VertexMap place(int n, int m, int block, const VertexList& e) {
  VertexMap a;
  a.image.resize(n);
  for (int x = 0; x < n; ++x) a.image[x] = m + block * n + x;
  for (int i = 0; i < m; ++i) a.image[e[i]] = i;
  return a;
}

// Vertex layout of tripod_forest(t): component c occupies a block of 3t+1
// labels, its center first, then the legs outward one after another.
struct TripodLayout {
  int t, block;
  explicit TripodLayout(int t_) : t(t_), block(3 * t_ + 1) {}
  int component(int v) const { return v / block; }
  int center(int c) const { return c * block; }
  int leg(int v) const { return (v % block - 1) / t; }
  int depth(int v) const { return v % block == 0 ? 0 : (v % block - 1) % t + 1; }
  int at(int c, int leg, int depth) const { return depth == 0 ? center(c) : center(c) + 1 + leg * t + depth - 1; }
};

class FreeList {
 public:
  explicit FreeList(int n) : used_(n, false) {}
  void take(int v) { used_.at(v) = true; }
  bool used(int v) const { return used_[v]; }
  // Lowest unused vertex of `pool`.
  int lowest(const VertexList& pool) {
    for (int v : pool)
      if (!used_[v]) {
        used_[v] = true;
        return v;
      }
    throw InvariantError("ran out of host vertices while placing a tripod");
  }

 private:
  std::vector<bool> used_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Biclique with a path

void validate(const BicliquePathInstance& inst) {
  const std::string L = "biclique-path";
  const Graph& h = inst.h;
  if (inst.t < 1) throw PreconditionError(L + ": t must be positive");
  if (!disjoint_cover(h.order(), {&inst.a, &inst.b, &inst.c}))
    throw PreconditionError(L + ": A, B, C must partition the vertex set");
  const int s = tripod_order(inst.t);
  if (static_cast<int>(inst.a.size()) != s || static_cast<int>(inst.b.size()) != s)
    violated(L, 1, "|A| and |B| must equal " + std::to_string(s));
  if (!is_independent(h, inst.a) || !is_independent(h, inst.b)) violated(L, 1, "A and B must be independent");
  if (!complete_between(h, inst.a, inst.b)) violated(L, 2, "A must be complete to B");
  const auto& c = inst.c;
  if (c.size() < 2) violated(L, 3, "C needs at least two vertices");
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (h.adjacent(c[i], c[j]) != (j == i + 1)) violated(L, 3, "H[C] is not the path in the given order");
  VertexList ab = set_union(inst.a, inst.b);
  const int x = c.front(), y = c.back();
  auto nx = neighbours_in(h, x, ab), ny = neighbours_in(h, y, ab);
  if (nx.empty() || ny.empty()) violated(L, 4, "both x and y need a neighbour in A ∪ B");
  VertexList inner(c.begin() + 1, c.end() - 1);
  if (!anticomplete_between(h, inner, ab)) violated(L, 4, "inner path vertices see A ∪ B");
  if (h.degree(x) != 2) violated(L, 5, "the anchor x must have degree 2");
  if (nx == ny) violated(L, 6, "x and y have the same neighbours in A ∪ B");
}

namespace {

// Subgraph embedding of tS_{t,t,t} into the instance, induced at v, following
// the anchor construction: v on x, its parent on x's neighbour in A ∪ B, the
// outward part of v's leg along C and on into the biclique.
VertexList anchor_embedding(const BicliquePathInstance& inst, const Graph& g, int v) {
  const Graph& h = inst.h;
  TripodLayout lay(inst.t);
  const int x = inst.c.front(), y = inst.c.back();
  VertexList ab = set_union(inst.a, inst.b);
  const int z = neighbours_in(h, x, ab).front();
  auto in_a = membership(h.order(), inst.a);
  auto other_side = [&](int img) -> const VertexList& { return in_a[img] ? inst.b : inst.a; };

  VertexList phi(g.order(), -1);
  FreeList free(h.order());
  auto put = [&](int gv, int hv) {
    phi[gv] = hv;
    free.take(hv);
  };
  const int comp = lay.component(v), leg = lay.leg(v), d = lay.depth(v);
  const int parent = lay.at(comp, leg, d - 1);
  put(v, x);
  put(parent, z);
  VertexList path;  // v, then outward to the leaf
  for (int k = d; k <= inst.t; ++k) path.push_back(lay.at(comp, leg, k));
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (i < inst.c.size()) {
      put(path[i], inst.c[i]);
    } else if (i == inst.c.size()) {
      VertexList ny;
      for (int u : neighbours_in(h, y, ab))
        if (u != z) ny.push_back(u);
      phi[path[i]] = free.lowest(ny);
    } else {
      phi[path[i]] = free.lowest(other_side(phi[path[i - 1]]));
    }
  }
  // The rest of v's spider hangs off the parent, inside the biclique.
  std::deque<int> queue{parent};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int u : g.neighbors(cur))
      if (phi[u] < 0) {
        phi[u] = free.lowest(other_side(phi[cur]));
        queue.push_back(u);
      }
  }
  for (int c = 0; c < inst.t; ++c) {
    if (c == comp) continue;
    for (int k = 0; k < lay.block; ++k) {
      int u = lay.center(c) + k;
      phi[u] = free.lowest(lay.depth(u) % 2 == 0 ? inst.a : inst.b);
    }
  }
  return phi;
}

Embedding local_embedding(const BicliquePathInstance& inst, const Graph& g, int v, long long budget) {
  bool gave_up = false;
  auto found = find_embedding_bounded(g, inst.h, EmbedMode::InducedAt, {v}, budget, &gave_up);
  if (found) return *found;
  if (!gave_up) throw InvariantError("biclique-path: no embedding induced at vertex " + std::to_string(v));
  Embedding e{anchor_embedding(inst, g, v), EmbedMode::InducedAt, {v}};
  std::string why;
  if (!validate_embedding(g, inst.h, e, &why))
    throw InvariantError("biclique-path: anchor embedding at " + std::to_string(v) + " invalid: " + why);
  return e;
}

}  // namespace

SiWitness witness_biclique_path(const BicliquePathInstance& inst, long long search_budget) {
  validate(inst);
  const Graph& h = inst.h;
  const int n = h.order(), t = inst.t;
  const Graph g = tripod_forest(t);
  const int s = g.order();
  TripodLayout lay(t);
  SiWitness w{h, {}, g};
  int block = 0;
  for (int v = 0; v < s; ++v) {
    if (g.degree(v) > 2) continue;
    w.maps.push_back(place(n, s, block++, local_embedding(inst, g, v, search_budget).map));
  }
  // Biclique placements: the first puts every Q_i on the A side and every R_i
  // on the B side (Q_i is the class of the i-th center); the j-th swaps Q_j
  // and R_j. Unused biclique slots and C take private labels.
  for (int j = -1; j < t; ++j) {
    VertexList side_a, side_b;
    for (int u = 0; u < s; ++u) {
      const bool q = lay.depth(u) % 2 == 0;
      const bool swapped = lay.component(u) == j;
      ((q != swapped) ? side_a : side_b).push_back(u);
    }
    VertexMap m;
    m.image.resize(n);
    for (int x = 0; x < n; ++x) m.image[x] = s + block * n + x;
    for (std::size_t i = 0; i < side_a.size(); ++i) m.image[inst.a[i]] = side_a[i];
    for (std::size_t i = 0; i < side_b.size(); ++i) m.image[inst.b[i]] = side_b[i];
    w.maps.push_back(std::move(m));
    ++block;
  }
  require_verified(w, "biclique-path");
  return w;
}

// ---------------------------------------------------------------------------
// Peeling edges between v and A

SiWitness witness_peel(const Graph& h, const VertexList& a, const VertexList& b, int v,
                       const VertexList& keep) {
  const std::string L = "peel";
  VertexList vv{v};
  if (!disjoint_cover(h.order(), {&a, &b, &vv}))
    throw PreconditionError(L + ": A, B and v must partition the vertex set");
  if (!is_independent(h, a) && !is_clique(h, a)) violated(L, 2, "A must be independent or a clique");
  if (!complete_between(h, a, b)) violated(L, 3, "A must be complete to B");
  VertexList na = neighbours_in(h, v, a);
  VertexList non = set_difference(a, na);
  if (na.empty() || non.empty()) violated(L, 4, "v needs a neighbour and a non-neighbour in A");
  VertexList ks = sorted_unique(keep);
  if (!std::includes(na.begin(), na.end(), ks.begin(), ks.end()))
    throw PreconditionError(L + ": keep must consist of neighbours of v in A");
  const int k = non.front();
  SiWitness w{h, {VertexMap::identity(h.order())}, h};
  std::vector<Edge> removed;
  for (int x : set_difference(na, ks)) {
    // x and k are twins in h - v, so swapping them moves the edge vx to vk.
    VertexMap m = VertexMap::identity(h.order());
    std::swap(m.image[x], m.image[k]);
    w.maps.push_back(std::move(m));
    removed.emplace_back(v, x);
  }
  w.claimed = remove_edges(h, removed);
  if (!(evaluate_witness(w) == w.claimed)) throw InvariantError(L + ": intersection differs from h minus the edges");
  return w;
}

// ---------------------------------------------------------------------------
// X_p / Y_p

namespace {

struct XYShape {
  char kind;
  int p, x;
  VertexList part[2];
};

std::optional<XYShape> recognize_xy(const Graph& h) {
  for (int x = 0; x < h.order(); ++x) {
    if (h.degree(x) != 2) continue;
    VertexList rest;
    for (int u = 0; u < h.order(); ++u)
      if (u != x) rest.push_back(u);
    if (rest.empty()) continue;
    // Two-colour h - x from its lowest vertex.
    std::vector<int> side(h.order(), -1);
    side[rest[0]] = 0;
    std::deque<int> q{rest[0]};
    bool ok = true;
    while (!q.empty() && ok) {
      int u = q.front();
      q.pop_front();
      for (int y : h.neighbors(u)) {
        if (y == x) continue;
        if (side[y] < 0) {
          side[y] = 1 - side[u];
          q.push_back(y);
        } else if (side[y] == side[u]) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    XYShape s{'X', 0, x, {}};
    for (int u : rest) {
      if (side[u] < 0) ok = false;
      else s.part[side[u]].push_back(u);
    }
    if (!ok || s.part[0].size() != s.part[1].size()) continue;
    if (!complete_between(h, s.part[0], s.part[1])) continue;
    s.p = static_cast<int>(s.part[0].size());
    const auto& nb = h.neighbors(x);
    s.kind = side[nb[0]] == side[nb[1]] ? 'X' : 'Y';
    if (s.kind == 'X' && s.p < 2) continue;
    return s;
  }
  return std::nullopt;
}

// s vertices of `part` avoiding `skip`, containing `must` when it lies in part.
VertexList choose_part(const VertexList& part, int skip, int must, int s) {
  VertexList out;
  if (std::find(part.begin(), part.end(), must) != part.end()) out.push_back(must);
  for (int u : part)
    if (static_cast<int>(out.size()) < s && u != skip && u != must) out.push_back(u);
  return sorted_unique(out);
}

}  // namespace

SiWitness witness_xy_to_tripods(const Graph& h, int t) {
  if (t < 1) throw PreconditionError("xy-to-tripods: t must be positive");
  auto shape = recognize_xy(h);
  if (!shape) throw PreconditionError("xy-to-tripods: graph is not isomorphic to X_p or Y_p");
  const int s = tripod_order(t);
  if (shape->p < s + 1)
    throw PreconditionError("xy-to-tripods: p = " + std::to_string(shape->p) + " is below the threshold " +
                            std::to_string(s + 1));
  const int x = shape->x, y = h.neighbors(x)[0], z = h.neighbors(x)[1];
  VertexList a = choose_part(shape->part[0], y, z, s);
  VertexList b = choose_part(shape->part[1], y, z, s);
  VertexList u = set_union(set_union(a, b), {x, y});
  auto pos = positions(h.order(), u);
  BicliquePathInstance inst{induced_subgraph(h, u), mapped(pos, a), mapped(pos, b), {pos[x], pos[y]}, t};
  SiWitness w = compose_witness(witness_induced(h, u), witness_biclique_path(inst));
  require_verified(w, "xy-to-tripods");
  return w;
}

// ---------------------------------------------------------------------------
// Biclique plus a vertex

namespace {

// Y_p from a biclique where v is mixed on both sides: peel each side down to
// its lowest neighbour.
SiWitness mixed_both(const Graph& h, const VertexList& a, const VertexList& b, int v) {
  VertexList na = neighbours_in(h, v, a);
  SiWitness first = witness_peel(h, a, b, v, {na.front()});
  VertexList nb = neighbours_in(first.claimed, v, b);
  SiWitness second = witness_peel(first.claimed, b, a, v, {nb.front()});
  return compose_witness(first, second);
}

}  // namespace

XYWitness witness_biclique_plus_vertex(const Graph& h, const VertexList& a, const VertexList& b,
                                       int v, int p) {
  const std::string L = "biclique-plus-vertex";
  VertexList vv{v};
  if (!disjoint_cover(h.order(), {&a, &b, &vv})) violated(L, 1, "A, B and v must partition the vertex set");
  if (!is_independent(h, a) || !is_independent(h, b) || !complete_between(h, a, b))
    violated(L, 2, "A and B must be independent and complete to each other");
  if (p < 3) throw PreconditionError(L + ": p must be at least 3");
  if (static_cast<int>(a.size()) < p || static_cast<int>(b.size()) < p)
    violated(L, 3, "both parts need at least p vertices");
  VertexList na = neighbours_in(h, v, a), nb = neighbours_in(h, v, b);
  VertexList xa = set_difference(a, na), xb = set_difference(b, nb);
  if (na.size() + nb.size() < 2) violated(L, 4, "v needs at least two neighbours in A ∪ B");
  const bool mixed_a = !na.empty() && !xa.empty(), mixed_b = !nb.empty() && !xb.empty();
  if (!mixed_a && !mixed_b) violated(L, 5, "v must have a neighbour and a non-neighbour in A or in B");

  // Shrink both parts to p, keeping the pattern of v on each side.
  auto shrink = [&](const VertexList& nbr, const VertexList& non) {
    int keep = non.empty() ? p : std::min<int>(static_cast<int>(nbr.size()), p - 1);
    VertexList out(nbr.begin(), nbr.begin() + keep);
    out.insert(out.end(), non.begin(), non.begin() + (p - keep));
    return sorted_unique(out);
  };
  VertexList a0 = shrink(na, xa), b0 = shrink(nb, xb);
  VertexList u = set_union(set_union(a0, b0), {v});
  auto pos = positions(h.order(), u);
  Graph h0 = induced_subgraph(h, u);
  VertexList a1 = mapped(pos, a0), b1 = mapped(pos, b0);
  const int v1 = pos[v];
  SiWitness w = witness_induced(h, u);
  XYWitness out;
  auto na1 = neighbours_in(h0, v1, a1), nb1 = neighbours_in(h0, v1, b1);
  const bool ca = na1.size() == a1.size(), cb = nb1.size() == b1.size();
  if (mixed_a && mixed_b) {
    w = compose_witness(w, mixed_both(h0, a1, b1, v1));
    out.reached = 'Y';
  } else if (ca || cb) {
    // Exchange the parts pairwise; in the intersection v is mixed on both.
    VertexMap swap = VertexMap::identity(h0.order());
    for (int i = 0; i < p; ++i) std::swap(swap.image[a1[i]], swap.image[b1[i]]);
    SiWitness both{h0, {VertexMap::identity(h0.order()), swap}, Graph()};
    both.claimed = evaluate_witness(both);
    w = compose_witness(w, both);
    w = compose_witness(w, mixed_both(both.claimed, a1, b1, v1));
    out.reached = 'Y';
  } else {
    // Anticomplete to one side, at least two neighbours on the other.
    const bool on_a = !na1.empty();
    const VertexList& side = on_a ? a1 : b1;
    const VertexList& far = on_a ? b1 : a1;
    VertexList nbr = on_a ? na1 : nb1;
    w = compose_witness(w, witness_peel(h0, side, far, v1, {nbr[0], nbr[1]}));
    out.reached = 'X';
  }
  Graph target = out.reached == 'X' ? x_graph(p) : y_graph(p);
  if (!is_isomorphic(evaluate_witness(w), target)) throw InvariantError(L + ": result is not the expected graph");
  w.claimed = target;
  require_verified(w, L);
  out.witness = std::move(w);
  return out;
}

// ---------------------------------------------------------------------------
// Clique with three paths

void validate(const CliqueThreePathInstance& inst) {
  const std::string L = "clique-three-paths";
  const Graph& h = inst.h;
  if (inst.t < 1) throw PreconditionError(L + ": t must be positive");
  const int s = tripod_order(inst.t);
  if (static_cast<int>(inst.a.size()) < s + 1) violated(L, 1, "|A| must be at least " + std::to_string(s + 1));
  for (int v : inst.a)
    if (v < 0 || v >= h.order()) throw PreconditionError(L + ": vertex out of range");
  if (!is_clique(h, inst.a)) violated(L, 2, "A must be a clique");
  auto in_a = membership(h.order(), inst.a);
  const int w = inst.w;
  if (w < 0 || w >= h.order() || in_a[w]) violated(L, 3, "the hub w must lie outside A");
  VertexList t_set;
  std::vector<int> seen(h.order(), 0);
  for (const auto& q : inst.q) {
    if (q.size() < 2 || q.front() != w) violated(L, 3, "each Q_i must start at w and have an edge");
    for (std::size_t i = 0; i + 1 < q.size(); ++i)
      if (q[i + 1] < 0 || q[i + 1] >= h.order() || !h.adjacent(q[i], q[i + 1]))
        violated(L, 3, "Q_i is not a path");
    for (std::size_t i = 1; i < q.size(); ++i)
      if (seen[q[i]]++) violated(L, 3, "Q_i - w must be pairwise disjoint paths");
    t_set.insert(t_set.end(), q.begin(), q.end());
  }
  t_set = sorted_unique(t_set);
  if (!in_a[inst.q[0].back()] || !in_a[inst.q[1].back()] || !in_a[inst.q[2].back()])
    violated(L, 3, "each Q_i must end in A");
  if (static_cast<int>(set_union(inst.a, t_set).size()) != h.order())
    violated(L, 3, "V(H) must be A ∪ T");
  if (h.degree(w) != 3) violated(L, 4, "w must have degree 3");
  int in_both = 0;
  for (int v : t_set) in_both += in_a[v];
  if (in_both != 3) violated(L, 5, "A ∩ T must be exactly the three endpoints");
  VertexList cyc = sorted_unique(set_union(inst.q[0], inst.q[1]));
  Graph c = induced_subgraph(h, cyc);
  bool cycle = c.order() >= 3 && is_connected(c) && c.size() == c.order();
  for (int v = 0; v < c.order() && cycle; ++v) cycle = c.degree(v) == 2;
  if (!cycle) violated(L, 6, "H[Q1 ∪ Q2] must be a chordless cycle");
  VertexList a_out = set_difference(inst.a, t_set), t_out = set_difference(t_set, inst.a);
  if (!anticomplete_between(h, a_out, t_out)) violated(L, 7, "A \\ T must be anticomplete to T \\ A");
}

SiWitness witness_clique_three_paths(const CliqueThreePathInstance& inst) {
  validate(inst);
  const Graph& h = inst.h;
  const int t = inst.t;
  const Graph g = tripod_forest(t);
  TripodLayout lay(t);
  const auto& q1 = inst.q[0];
  const int y1 = q1.back(), y2 = inst.q[1].back(), y3 = inst.q[2].back();
  const int u = q1[q1.size() - 2];  // neighbour of y1 on Q1, possibly w

  std::vector<Embedding> embs;
  for (int v = 0; v < g.order(); ++v) {
    VertexList phi(g.order(), -1);
    FreeList free(h.order());
    auto put = [&](int gv, int hv) {
      phi[gv] = hv;
      free.take(hv);
    };
    VertexList pool = inst.a;  // where everything else goes
    const int comp = lay.component(v), d = lay.depth(v);
    std::deque<int> queue;
    if (g.degree(v) == 3) {
      put(v, inst.w);
      // Legs along the paths first, so no tail steals an endpoint y_j.
      for (int leg = 0; leg < 3; ++leg)
        for (int k = 1; k <= t && k < static_cast<int>(inst.q[leg].size()); ++k)
          put(lay.at(comp, leg, k), inst.q[leg][k]);
      for (int leg = 0; leg < 3; ++leg)
        for (int k = static_cast<int>(inst.q[leg].size()); k <= t; ++k) phi[lay.at(comp, leg, k)] = free.lowest(pool);
    } else {
      const int leg = lay.leg(v), parent = lay.at(comp, leg, d - 1);
      put(v, u);
      put(parent, y1);
      if (g.degree(v) == 2) {
        pool = set_difference(inst.a, {y3});
        VertexList around;  // the cycle from u away from y1
        for (int i = static_cast<int>(q1.size()) - 3; i >= 0; --i) around.push_back(q1[i]);
        around.insert(around.end(), inst.q[1].begin() + 1, inst.q[1].end());
        for (int k = d + 1; k <= t; ++k) {
          const std::size_t i = k - d - 1;
          if (i < around.size()) put(lay.at(comp, leg, k), around[i]);
          else phi[lay.at(comp, leg, k)] = free.lowest(pool);
        }
      } else {
        pool = set_difference(inst.a, {y1, y2, y3});
      }
      queue.push_back(parent);
    }
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      for (int x : g.neighbors(cur))
        if (phi[x] < 0) {
          phi[x] = free.lowest(pool);
          queue.push_back(x);
        }
    }
    for (int x = 0; x < g.order(); ++x)
      if (phi[x] < 0) phi[x] = free.lowest(pool);
    embs.push_back(Embedding{phi, EmbedMode::InducedAt, {v}});
  }
  SiWitness w = witness_from_local_embeddings(h, g, embs);
  require_verified(w, "clique-three-paths");
  return w;
}

// ---------------------------------------------------------------------------
// Line graph of a tripod forest

SiWitness witness_linegraph_spider(int t, int q) {
  if (t < 1) throw PreconditionError("linegraph-spider: t must be positive");
  if (q < 2) throw PreconditionError("linegraph-spider: q must be at least 2");
  // Two placements of L(S_{q,q,q}) on labels 0..3q.
  LabeledGraph first, second;
  for (int i = 1; i <= 3 * q; ++i) first.vertices.push_back(i);
  for (int i = 1; i <= 2 * q - 1; ++i) first.edges.emplace_back(i, i + 1);
  for (int i = 2 * q + 1; i <= 3 * q - 1; ++i) first.edges.emplace_back(i, i + 1);
  first.edges.emplace_back(q, 2 * q + 1);
  first.edges.emplace_back(q + 1, 2 * q + 1);
  for (int i = 0; i <= 3 * q; ++i)
    if (i != 2 * q) second.vertices.push_back(i);
  for (int i = 0; i <= 2 * q - 2; ++i) second.edges.emplace_back(i, i + 1);
  for (int i = 2 * q + 1; i <= 3 * q - 1; ++i) second.edges.emplace_back(i, i + 1);
  second.edges.emplace_back(q - 1, 2 * q + 1);
  second.edges.emplace_back(q, 2 * q + 1);
  for (auto* lg : {&first, &second}) std::sort(lg->edges.begin(), lg->edges.end());

  const Graph host = line_graph(spiders(t, q, q, q));
  const int block = 3 * q + 1;
  SiWitness w{host, {}, spiders(t, q - 1, q - 1, q)};
  auto comps = components(host);
  for (const LabeledGraph* lg : {&first, &second}) {
    const Graph shape = lg->normalize();
    VertexMap m;
    m.image.assign(host.order(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      Graph piece = induced_subgraph(host, comps[c]);
      auto iso = is_isomorphic(piece, shape);
      if (!iso) throw InvariantError("linegraph-spider: component is not L(S_{q,q,q})");
      for (std::size_t i = 0; i < comps[c].size(); ++i)
        m.image[comps[c][i]] = static_cast<int>(c) * block + lg->vertices[(*iso)[i]];
    }
    w.maps.push_back(std::move(m));
  }
  require_verified(w, "linegraph-spider");
  return w;
}

}  // namespace sic

// ---------------------------------------------------------------------------
// Random instances

namespace sic {

namespace {

VertexList relabeled(const VertexList& perm, const VertexList& vs) {
  VertexList out;
  for (int v : vs) out.push_back(perm[v]);
  return out;
}

// Random subset of `pool`; every element kept with probability 1/2.
VertexList random_subset(Rng& rng, const VertexList& pool) {
  VertexList out;
  for (int v : pool)
    if (coin(rng, 1, 2)) out.push_back(v);
  return out;
}

VertexList range(int lo, int hi) {
  VertexList out;
  for (int v = lo; v < hi; ++v) out.push_back(v);
  return out;
}

void add_biclique(std::vector<Edge>& es, const VertexList& a, const VertexList& b) {
  for (int x : a)
    for (int y : b) es.emplace_back(x, y);
}

void add_clique(std::vector<Edge>& es, const VertexList& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) es.emplace_back(a[i], a[j]);
}

}  // namespace

BicliquePathInstance random_biclique_path_instance(Rng& rng, int t) {
  const int s = tripod_order(t);
  const int len = uniform_int(rng, 2, 5);
  const int n = 2 * s + len;
  VertexList a = range(0, s), b = range(s, 2 * s), c = range(2 * s, n), ab = range(0, 2 * s);
  std::vector<Edge> es;
  add_biclique(es, a, b);
  for (int i = 0; i + 1 < len; ++i) es.emplace_back(c[i], c[i + 1]);
  const int z = uniform_int(rng, 0, 2 * s - 1);
  es.emplace_back(c.front(), z);
  VertexList ny;
  do {
    ny = random_subset(rng, ab);
  } while (ny.empty() || ny == VertexList{z});
  for (int u : ny) es.emplace_back(c.back(), u);
  auto perm = random_permutation(rng, n);
  Graph h = relabel(Graph(n, std::move(es)), perm);
  return {h, sorted_unique(relabeled(perm, a)), sorted_unique(relabeled(perm, b)), relabeled(perm, c), t};
}

PeelInstance random_peel_instance(Rng& rng) {
  const int na = uniform_int(rng, 2, 6), nb = uniform_int(rng, 0, 4);
  const int n = na + nb + 1, v = n - 1;
  VertexList a = range(0, na), b = range(na, na + nb);
  std::vector<Edge> es;
  add_biclique(es, a, b);
  if (coin(rng, 1, 2)) add_clique(es, a);
  VertexList nv;
  do {
    nv = random_subset(rng, a);
  } while (nv.empty() || static_cast<int>(nv.size()) == na);
  for (int u : nv) es.emplace_back(u, v);
  for (int u : random_subset(rng, b)) es.emplace_back(u, v);
  VertexList keep = random_subset(rng, nv);
  auto perm = random_permutation(rng, n);
  return {relabel(Graph(n, std::move(es)), perm), sorted_unique(relabeled(perm, a)),
          sorted_unique(relabeled(perm, b)), sorted_unique(relabeled(perm, keep)), perm[v]};
}

Graph random_xy_instance(Rng& rng, int t, char kind, int extra) {
  const int p = tripod_order(t) + 1 + extra;
  return shuffle_labels(rng, kind == 'X' ? x_graph(p) : y_graph(p));
}

BicliqueVertexInstance random_biclique_vertex_instance(Rng& rng, int p, BicliqueVertexCase kind) {
  const int na = p + uniform_int(rng, 0, 2), nb = p + uniform_int(rng, 0, 2);
  const int n = na + nb + 1, v = n - 1;
  VertexList a = range(0, na), b = range(na, na + nb);
  std::vector<Edge> es;
  add_biclique(es, a, b);
  auto mixed = [&](const VertexList& side, int at_least) {
    VertexList out;
    do {
      out = random_subset(rng, side);
    } while (static_cast<int>(out.size()) < at_least || out.size() == side.size());
    return out;
  };
  VertexList nv;
  bool flip = coin(rng, 1, 2);
  const VertexList& one = flip ? b : a;
  const VertexList& other = flip ? a : b;
  switch (kind) {
    case BicliqueVertexCase::MixedBoth:
      nv = set_union(mixed(a, 1), mixed(b, 1));
      break;
    case BicliqueVertexCase::CompleteToOne:
      nv = set_union(one, mixed(other, 1));
      break;
    case BicliqueVertexCase::AnticompleteToOne:
      nv = mixed(other, 2);
      break;
  }
  for (int u : nv) es.emplace_back(u, v);
  auto perm = random_permutation(rng, n);
  return {relabel(Graph(n, std::move(es)), perm), sorted_unique(relabeled(perm, a)),
          sorted_unique(relabeled(perm, b)), perm[v], p};
}

CliqueThreePathInstance random_clique_three_paths_instance(Rng& rng, int t) {
  const int na = tripod_order(t) + 1 + uniform_int(rng, 0, 2);
  VertexList a = range(0, na);
  int next = na;
  const int w = next++;
  std::vector<Edge> es;
  add_clique(es, a);
  VertexList q[3];
  VertexList inner[3];
  for (int i = 0; i < 3; ++i) {
    q[i].push_back(w);
    const int len = uniform_int(rng, 1, 3);
    for (int k = 1; k < len; ++k) {
      inner[i].push_back(next);
      q[i].push_back(next++);
    }
    q[i].push_back(i);  // y_i
    for (std::size_t k = 0; k + 1 < q[i].size(); ++k) es.emplace_back(q[i][k], q[i][k + 1]);
  }
  // Q3 may see the inner vertices of the cycle.
  for (int u : inner[2])
    for (int x : set_union(inner[0], inner[1]))
      if (coin(rng, 1, 3)) es.emplace_back(u, x);
  const int n = next;
  auto perm = random_permutation(rng, n);
  CliqueThreePathInstance inst;
  inst.h = relabel(Graph(n, std::move(es)), perm);
  inst.a = sorted_unique(relabeled(perm, a));
  inst.w = perm[w];
  for (int i = 0; i < 3; ++i) inst.q[i] = relabeled(perm, q[i]);
  inst.t = t;
  return inst;
}

}  // namespace sic
