#include "sic/treewidth.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>

#include "sic/error.hpp"

namespace sic {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

TreeDecomposition decomposition_from_order(const Graph& g, const VertexList& order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) throw PreconditionError("elimination order must list every vertex");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0) throw PreconditionError("elimination order is not a permutation");
    pos[order[i]] = i;
  }
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    return td;
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  std::vector<VertexList> later(n);
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    for (int u = 0; u < n; ++u)
      if (adj[v][u] && pos[u] > i) later[v].push_back(u);
    for (int a : later[v])
      for (int b : later[v])
        if (a != b) adj[a][b] = true;
  }
  // Bag i belongs to order[i]; its parent is the bag of the earliest later
  // neighbour. Roots of different components are chained to the last bag.
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    VertexList bag = later[v];
    bag.push_back(v);
    td.bags.push_back(sorted_unique(bag));
    int parent = -1;
    for (int u : later[v])
      if (parent < 0 || pos[u] < parent) parent = pos[u];
    if (parent < 0 && i != n - 1) parent = n - 1;
    if (parent >= 0) td.tree.emplace_back(i, parent);
  }
  return td;
}

bool validate_decomposition(const Graph& g, const TreeDecomposition& td, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const int n = g.order(), k = static_cast<int>(td.bags.size());
  if (k == 0) return fail("no bags");
  if (static_cast<int>(td.tree.size()) != k - 1) return fail("bag graph has the wrong number of edges for a tree");
  std::vector<VertexList> tadj(k);
  for (auto [a, b] : td.tree) {
    if (a < 0 || b < 0 || a >= k || b >= k || a == b) return fail("tree edge out of range");
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  {
    std::vector<bool> seen(k, false);
    std::deque<int> q{0};
    seen[0] = true;
    int count = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : tadj[x])
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          q.push_back(y);
        }
    }
    if (count != k) return fail("bag graph is not connected");
  }
  std::vector<std::vector<int>> holders(n);
  for (int i = 0; i < k; ++i)
    for (int v : td.bags[i]) {
      if (v < 0 || v >= n) return fail("bag " + std::to_string(i) + " holds a vertex out of range");
      holders[v].push_back(i);
    }
  for (int v = 0; v < n; ++v)
    if (holders[v].empty()) return fail("vertex " + std::to_string(v) + " is in no bag");
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int i : holders[u])
      if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) covered = true;
    if (!covered) return fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
  }
  for (int v = 0; v < n; ++v) {
    std::vector<bool> in(k, false), seen(k, false);
    for (int i : holders[v]) in[i] = true;
    std::deque<int> q{holders[v][0]};
    seen[holders[v][0]] = true;
    std::size_t count = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : tadj[x])
        if (in[y] && !seen[y]) {
          seen[y] = true;
          ++count;
          q.push_back(y);
        }
    }
    if (count != holders[v].size()) return fail("bags holding vertex " + std::to_string(v) + " are not connected");
  }
  return true;
}

TreewidthResult exact_treewidth(const Graph& g) {
  const int n = g.order();
  if (n > kExactTreewidthMaxOrder)
    throw GuardError("exact treewidth is limited to " + std::to_string(kExactTreewidthMaxOrder) + " vertices");
  std::vector<std::uint32_t> nb(n, 0);
  for (auto [u, v] : g.edges()) {
    nb[u] |= 1U << v;
    nb[v] |= 1U << u;
  }
  // |Q(S, v)|: vertices outside S + v reachable from v through S.
  auto q_size = [&](std::uint32_t s, int v) {
    std::uint32_t comp = 1U << v, frontier = comp;
    const std::uint32_t inside = s | (1U << v);
    std::uint32_t reach = 0;
    while (frontier) {
      std::uint32_t nxt = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) nxt |= nb[std::countr_zero(f)];
      reach |= nxt & ~inside;
      nxt &= inside & ~comp;
      comp |= nxt;
      frontier = nxt;
    }
    return std::popcount(reach);
  };
  const std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1;
  std::vector<signed char> tw(static_cast<std::size_t>(full) + 1, 0);
  std::vector<signed char> last(static_cast<std::size_t>(full) + 1, -1);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    int best = 127, arg = -1;
    for (std::uint32_t r = s; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      const std::uint32_t rest = s & ~(1U << v);
      const int val = std::max<int>(tw[rest], q_size(rest, v));
      if (val < best) best = val, arg = v;
    }
    tw[s] = static_cast<signed char>(best);
    last[s] = static_cast<signed char>(arg);
    if (s == full) break;
  }
  VertexList order;
  for (std::uint32_t s = full; s; s &= ~(1U << last[s])) order.push_back(last[s]);
  std::reverse(order.begin(), order.end());
  TreewidthResult r{n == 0 ? -1 : static_cast<int>(tw[full]), decomposition_from_order(g, order)};
  std::string why;
  if (!validate_decomposition(g, r.decomposition, &why)) throw InvariantError("exact treewidth: " + why);
  if (r.decomposition.width() != r.width) throw InvariantError("exact treewidth: decomposition width mismatch");
  return r;
}

TreewidthResult tw_upper_bound(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  std::vector<bool> gone(n, false);
  VertexList order;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long long best_fill = -1;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      VertexList nbrs;
      for (int u = 0; u < n; ++u)
        if (!gone[u] && adj[v][u]) nbrs.push_back(u);
      long long fill = 0;
      for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
          if (!adj[nbrs[i]][nbrs[j]]) ++fill;
      if (best < 0 || fill < best_fill) best = v, best_fill = fill;
    }
    VertexList nbrs;
    for (int u = 0; u < n; ++u)
      if (!gone[u] && adj[best][u]) nbrs.push_back(u);
    for (int a : nbrs)
      for (int b : nbrs)
        if (a != b) adj[a][b] = true;
    gone[best] = true;
    order.push_back(best);
  }
  TreewidthResult r;
  r.decomposition = decomposition_from_order(g, order);
  r.width = r.decomposition.width();
  return r;
}

// ---------------------------------------------------------------------------
// Independent set dynamic program

namespace {

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NiceKind kind;
  VertexList bag;
  int vertex = -1;  // introduced or forgotten
  std::vector<int> children;
};

class NiceBuilder {
 public:
  std::vector<NiceNode> nodes;

  // Chain from `bottom` (node index with bag `from`) up to bag `to`:
  // forget what `to` lacks, then introduce what it adds.
  int bridge(int bottom, VertexList from, const VertexList& to) {
    for (int v : set_difference(from, to)) {
      from = set_difference(from, {v});
      bottom = add({NiceKind::Forget, from, v, {bottom}});
    }
    for (int v : set_difference(to, from)) {
      from = set_union(from, {v});
      bottom = add({NiceKind::Introduce, from, v, {bottom}});
    }
    return bottom;
  }

  int leaf_to(const VertexList& bag) { return bridge(add({NiceKind::Leaf, {}, -1, {}}), {}, bag); }

  int add(NiceNode n) {
    nodes.push_back(std::move(n));
    return static_cast<int>(nodes.size()) - 1;
  }
};

int nicify(const TreeDecomposition& td, const std::vector<VertexList>& kids, int x, NiceBuilder& nb) {
  const VertexList& bag = td.bags[x];
  std::vector<int> tops;
  for (int c : kids[x]) tops.push_back(nb.bridge(nicify(td, kids, c, nb), td.bags[c], bag));
  if (tops.empty()) return nb.leaf_to(bag);
  int cur = tops[0];
  for (std::size_t i = 1; i < tops.size(); ++i) cur = nb.add({NiceKind::Join, bag, -1, {cur, tops[i]}});
  return cur;
}

using Table = std::map<VertexList, Score>;

void offer(Table& t, const VertexList& key, Score s) {
  auto it = t.find(key);
  if (it == t.end()) t.emplace(key, std::move(s));
  else if (better(s, it->second)) it->second = std::move(s);
}

Score without(const WeightedGraph& wg, const Score& s, const VertexList& drop) {
  Score out;
  out.set = set_difference(s.set, drop);
  out.weight = s.weight - wg.weight_of(set_intersection(s.set, drop));
  return out;
}

}  // namespace

Score mwis_treedp(const WeightedGraph& wg, const TreeDecomposition& td) {
  const Graph& g = wg.graph;
  std::string why;
  if (!validate_decomposition(g, td, &why)) throw PreconditionError("mwis_treedp: invalid decomposition: " + why);
  const int k = static_cast<int>(td.bags.size());
  std::vector<VertexList> tadj(k), kids(k);
  for (auto [a, b] : td.tree) {
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  {
    std::vector<bool> seen(k, false);
    std::deque<int> q{0};
    seen[0] = true;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : tadj[x])
        if (!seen[y]) {
          seen[y] = true;
          kids[x].push_back(y);
          q.push_back(y);
        }
    }
  }
  NiceBuilder nb;
  const int root = nb.bridge(nicify(td, kids, 0, nb), td.bags[0], {});

  // Children always precede parents in nb.nodes.
  std::vector<Table> tables(nb.nodes.size());
  for (std::size_t i = 0; i < nb.nodes.size(); ++i) {
    const NiceNode& node = nb.nodes[i];
    Table& t = tables[i];
    switch (node.kind) {
      case NiceKind::Leaf:
        t.emplace(VertexList{}, Score{});
        break;
      case NiceKind::Introduce: {
        const int v = node.vertex;
        for (const auto& [key, s] : tables[node.children[0]]) {
          offer(t, key, s);
          bool free = std::none_of(key.begin(), key.end(), [&](int u) { return g.adjacent(u, v); });
          if (free) offer(t, set_union(key, {v}), combine(s, Score::of(wg, {v})));
        }
        break;
      }
      case NiceKind::Forget:
        for (const auto& [key, s] : tables[node.children[0]]) offer(t, set_difference(key, {node.vertex}), s);
        break;
      case NiceKind::Join: {
        const Table& right = tables[node.children[1]];
        for (const auto& [key, s] : tables[node.children[0]]) {
          auto it = right.find(key);
          if (it != right.end()) offer(t, key, combine(s, without(wg, it->second, key)));
        }
        break;
      }
    }
    for (int c : node.children) Table().swap(tables[c]);
  }
  Score best = tables[root].at({});
  if (!is_independent(g, best.set) || best.weight != wg.weight_of(best.set))
    throw InvariantError("mwis_treedp: returned set fails its own check");
  return best;
}

}  // namespace sic
