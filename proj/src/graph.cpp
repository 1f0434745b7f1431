#include "sic/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "sic/error.hpp"

namespace sic {

Graph::Graph(int n, std::vector<Edge> edges, std::string name)
    : n_(n), edges_(std::move(edges)), name_(std::move(name)) {
  if (n < 0) throw PreconditionError("graph order must be nonnegative");
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + " " +
                              std::to_string(v));
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw PreconditionError("duplicate edge");
  adj_.assign(n, {});
  matrix_.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    matrix_[static_cast<std::size_t>(u) * n + v] = 1;
    matrix_[static_cast<std::size_t>(v) * n + u] = 1;
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

Graph Graph::renamed(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& row : adj_) d = std::max<int>(d, static_cast<int>(row.size()));
  return d;
}

std::vector<Bits> Graph::rows() const {
  if (n_ > Bits::kMaxBits)
    throw GuardError("graph has " + std::to_string(n_) + " vertices; bitset routines support at most " +
                     std::to_string(Bits::kMaxBits));
  std::vector<Bits> out(n_);
  for (auto [u, v] : edges_) {
    out[u].set(v);
    out[v].set(u);
  }
  return out;
}

Graph line_graph(const Graph& g) {
  const auto& es = g.edges();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d)
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return Graph(static_cast<int>(es.size()), std::move(out));
}

Graph disjoint_union(std::span<const Graph> gs) {
  int offset = 0;
  std::vector<Edge> es;
  for (const auto& g : gs) {
    for (auto [u, v] : g.edges()) es.emplace_back(u + offset, v + offset);
    offset += g.order();
  }
  return Graph(offset, std::move(es));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const Graph both[] = {a, b};
  return disjoint_union(std::span<const Graph>(both));
}

Graph induced_subgraph(const Graph& g, const VertexList& vertices) {
  VertexList us = sorted_unique(vertices);
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (us[i] < 0 || us[i] >= g.order())
      throw PreconditionError("induced_subgraph: vertex out of range: " + std::to_string(us[i]));
    pos[us[i]] = static_cast<int>(i);
  }
  std::vector<Edge> es;
  for (auto [u, v] : g.edges())
    if (pos[u] >= 0 && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
  return Graph(static_cast<int>(us.size()), std::move(es));
}

Graph remove_vertices(const Graph& g, const VertexList& vertices) {
  auto gone = membership(g.order(), vertices);
  VertexList keep;
  for (int v = 0; v < g.order(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

Graph complement(const Graph& g) {
  std::vector<Edge> es;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) es.emplace_back(u, v);
  return Graph(g.order(), std::move(es));
}

Graph remove_edges(const Graph& g, const std::vector<Edge>& edges) {
  std::vector<Edge> drop;
  for (auto [u, v] : edges) {
    if (!g.adjacent(u, v)) throw PreconditionError("remove_edges: not an edge");
    drop.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> es;
  std::set_difference(g.edges().begin(), g.edges().end(), drop.begin(), drop.end(),
                      std::back_inserter(es));
  return Graph(g.order(), std::move(es));
}

Graph relabel(const Graph& g, const VertexList& perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw PreconditionError("relabel: permutation size mismatch");
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), std::move(es), g.name());
}

std::vector<VertexList> components_avoiding(const Graph& g, const std::vector<bool>& removed) {
  std::vector<VertexList> out;
  std::vector<bool> seen(g.order(), false);
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s] || removed[s]) continue;
    VertexList comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : g.neighbors(comp[i]))
        if (!seen[w] && !removed[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexList> components(const Graph& g) {
  return components_avoiding(g, std::vector<bool>(g.order(), false));
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_complete(const Graph& g) {
  const long long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

bool is_clique(const Graph& g, const VertexList& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

bool is_independent(const Graph& g, const VertexList& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

namespace {

// Multi-source BFS distances to `targets`, never entering blocked vertices.
std::vector<int> distances_to(const Graph& g, const std::vector<bool>& targets,
                              const std::vector<bool>& blocked) {
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> dist(g.order(), kInf);
  std::deque<int> queue;
  for (int v = 0; v < g.order(); ++v)
    if (targets[v] && !blocked[v]) {
      dist[v] = 0;
      queue.push_back(v);
    }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u))
      if (!blocked[w] && dist[w] == kInf) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

VertexList walk_down(const Graph& g, int from, const std::vector<int>& dist,
                     const std::vector<bool>& blocked) {
  VertexList path{from};
  int cur = from;
  while (dist[cur] > 0) {
    for (int w : g.neighbors(cur))
      if (!blocked[w] && dist[w] == dist[cur] - 1) {
        cur = w;
        break;
      }
    path.push_back(cur);
  }
  return path;
}

}  // namespace

VertexList shortest_path(const Graph& g, int from, const std::vector<bool>& targets,
                         const std::vector<bool>& blocked) {
  if (blocked[from]) return {};
  auto dist = distances_to(g, targets, blocked);
  if (dist[from] == std::numeric_limits<int>::max()) return {};
  return walk_down(g, from, dist, blocked);
}

VertexList shortest_path_between(const Graph& g, const std::vector<bool>& sources,
                                 const std::vector<bool>& targets,
                                 const std::vector<bool>& blocked) {
  auto dist = distances_to(g, targets, blocked);
  int best = -1;
  for (int v = 0; v < g.order(); ++v)
    if (sources[v] && !blocked[v] && dist[v] != std::numeric_limits<int>::max() &&
        (best < 0 || dist[v] < dist[best]))
      best = v;
  if (best < 0) return {};
  return walk_down(g, best, dist, blocked);
}

std::vector<bool> membership(int n, const VertexList& vertices) {
  std::vector<bool> in(n, false);
  for (int v : vertices) in.at(v) = true;
  return in;
}

VertexList sorted_unique(VertexList vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

VertexList set_difference(const VertexList& a, const VertexList& b) {
  VertexList sa = sorted_unique(a), sb = sorted_unique(b), out;
  std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
  return out;
}

VertexList set_intersection(const VertexList& a, const VertexList& b) {
  VertexList sa = sorted_unique(a), sb = sorted_unique(b), out;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
  return out;
}

VertexList set_union(const VertexList& a, const VertexList& b) {
  VertexList sa = sorted_unique(a), sb = sorted_unique(b), out;
  std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
  return out;
}

}  // namespace sic
