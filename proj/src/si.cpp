#include "sic/si.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>

#include "sic/canonical.hpp"
#include "sic/error.hpp"
#include "sic/graph_io.hpp"

namespace sic {

VertexMap VertexMap::identity(int n) {
  VertexMap m;
  m.image.resize(n);
  std::iota(m.image.begin(), m.image.end(), 0);
  return m;
}

void VertexMap::validate() const {
  std::vector<int> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() < 0) throw PreconditionError("map has a negative label");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("map is not injective");
}

int VertexMap::max_label() const {
  return image.empty() ? -1 : *std::max_element(image.begin(), image.end());
}

Graph LabeledGraph::normalize() const {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) {
    int a = static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), u) - vertices.begin());
    int b = static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
    es.emplace_back(a, b);
  }
  return Graph(static_cast<int>(vertices.size()), std::move(es));
}

LabeledGraph apply_map(const Graph& g, const VertexMap& a) {
  if (a.size() != g.order())
    throw PreconditionError("map defined on " + std::to_string(a.size()) + " vertices, graph has " +
                            std::to_string(g.order()));
  a.validate();
  LabeledGraph out;
  out.vertices = a.image;
  std::sort(out.vertices.begin(), out.vertices.end());
  for (auto [u, v] : g.edges()) {
    int x = a.image[u], y = a.image[v];
    out.edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

LabeledGraph intersect(const LabeledGraph& a, const LabeledGraph& b) {
  LabeledGraph out;
  std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                        std::back_inserter(out.vertices));
  std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                        std::back_inserter(out.edges));
  return out;
}

LabeledGraph witness_intersection(const SiWitness& w) {
  if (w.maps.empty()) throw PreconditionError("witness has no maps");
  LabeledGraph acc = apply_map(w.host, w.maps[0]);
  for (std::size_t i = 1; i < w.maps.size(); ++i) acc = intersect(acc, apply_map(w.host, w.maps[i]));
  return acc;
}

Graph evaluate_witness(const SiWitness& w) { return witness_intersection(w).normalize(); }

bool verify_witness(const SiWitness& w, std::string* diagnostic) {
  auto fail = [&](const std::string& msg) {
    if (diagnostic) *diagnostic = msg;
    return false;
  };
  if (w.maps.empty()) return fail("witness has no maps");
  for (std::size_t i = 0; i < w.maps.size(); ++i) {
    if (w.maps[i].size() != w.host.order())
      return fail("map " + std::to_string(i) + " has " + std::to_string(w.maps[i].size()) +
                  " entries, host has " + std::to_string(w.host.order()) + " vertices");
    try {
      w.maps[i].validate();
    } catch (const PreconditionError& e) {
      return fail("map " + std::to_string(i) + ": " + e.what());
    }
  }
  Graph got = evaluate_witness(w);
  if (got.order() != w.claimed.order())
    return fail("intersection has " + std::to_string(got.order()) + " vertices, claimed " +
                std::to_string(w.claimed.order()));
  if (got.size() != w.claimed.size())
    return fail("intersection has " + std::to_string(got.size()) + " edges, claimed " +
                std::to_string(w.claimed.size()));
  if (!is_isomorphic(got, w.claimed)) return fail("intersection is not isomorphic to the claimed graph");
  if (diagnostic) diagnostic->clear();
  return true;
}

void require_verified(const SiWitness& w, const std::string& context) {
  std::string why;
  if (!verify_witness(w, &why)) throw InvariantError(context + ": witness does not verify: " + why);
}

double si_pattern_cost(int n, int h) {
  double c = 1;
  for (int i = 0; i < h; ++i) c *= static_cast<double>(n - i);
  return c;
}

namespace {

// Lifts placed patterns (embeddings h -> g) to full maps: the embedded
// vertices take their h labels, the rest a block of labels private to the copy.
SiWitness lift_patterns(const Graph& g, const Graph& h, std::vector<VertexList> chosen) {
  if (chosen.size() == 1) chosen.push_back(chosen.front());
  const int k = h.order(), n = g.order();
  SiWitness w{g, {}, h};
  for (std::size_t j = 0; j < chosen.size(); ++j) {
    VertexMap m;
    m.image.resize(n);
    for (int x = 0; x < n; ++x) m.image[x] = k + static_cast<int>(j) * n + x;
    for (int i = 0; i < k; ++i) m.image[chosen[j][i]] = i;
    w.maps.push_back(std::move(m));
  }
  return w;
}

}  // namespace

SiResult si_oracle(const Graph& g, const Graph& h, const SiOptions& opts) {
  SiResult r;
  if (h.order() > g.order() || h.size() > g.size()) return r;
  if (h.order() == g.order() && h.size() == g.size() && is_isomorphic(g, h)) {
    r.holds = true;
    if (opts.want_witness) r.witness = SiWitness{g, {VertexMap::identity(g.order())}, h};
    return r;
  }
  const double cost = si_pattern_cost(g.order(), h.order());
  if (cost > opts.cost_cap)
    throw GuardError("si_oracle: " + std::to_string(static_cast<long long>(cost)) +
                     " placed patterns exceed the cap of " +
                     std::to_string(static_cast<long long>(opts.cost_cap)));
  const int k = h.order();
  std::vector<Edge> nonedges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!h.adjacent(i, j)) nonedges.emplace_back(i, j);
  std::vector<bool> covered(nonedges.size(), false);
  std::size_t left = nonedges.size();
  std::vector<VertexList> chosen;
  VertexList first;
  r.patterns_seen = for_each_embedding(h, g, EmbedMode::Subgraph, [&](const VertexList& m) {
    if (first.empty() && chosen.empty()) first = m;
    bool useful = false;
    for (std::size_t e = 0; e < nonedges.size(); ++e)
      if (!covered[e] && !g.adjacent(m[nonedges[e].first], m[nonedges[e].second])) {
        covered[e] = true;
        --left;
        useful = true;
      }
    if (useful) chosen.push_back(m);
    return left > 0;
  });
  if (r.patterns_seen == 0 || left > 0) return r;
  r.holds = true;
  if (chosen.empty()) chosen.push_back(first);
  if (opts.want_witness) r.witness = lift_patterns(g, h, std::move(chosen));
  return r;
}

namespace {

struct NaiveReach {
  std::set<std::string> keys;
};

struct PairHash {
  std::size_t operator()(const std::pair<std::uint32_t, std::uint64_t>& p) const {
    return std::hash<std::uint64_t>()(p.second * 0x9E3779B97F4A7C15ULL ^ p.first);
  }
};

// Classes of all intersections of at most `copies` copies of g placed in the
// universe. Copies after the first are intersected with a class
// representative: any two placements of isomorphic states differ by a
// permutation of the universe, which permutes the set of placements of g.
NaiveReach naive_reach(const Graph& g, int copies, int universe) {
  const int n = g.order();
  int pid[11][11];
  int next_pid = 0;
  for (int a = 0; a < universe; ++a)
    for (int b = a + 1; b < universe; ++b) pid[a][b] = pid[b][a] = next_pid++;

  // All placements of g.
  std::vector<std::pair<std::uint32_t, std::uint64_t>> placements;
  VertexList img(n);
  std::vector<bool> used(universe, false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      std::uint32_t vm = 0;
      std::uint64_t em = 0;
      for (int v = 0; v < n; ++v) vm |= 1U << img[v];
      for (auto [u, v] : g.edges()) em |= std::uint64_t{1} << pid[img[u]][img[v]];
      placements.emplace_back(vm, em);
      return;
    }
    for (int x = 0; x < universe; ++x)
      if (!used[x]) {
        used[x] = true;
        img[i] = x;
        self(self, i + 1);
        used[x] = false;
      }
  };
  rec(rec, 0);

  auto to_graph = [&](std::uint32_t vm, std::uint64_t em) {
    VertexList vs;
    for (int x = 0; x < universe; ++x)
      if (vm >> x & 1U) vs.push_back(x);
    LabeledGraph lg;
    lg.vertices = vs;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (em >> pid[vs[i]][vs[j]] & 1U) lg.edges.emplace_back(vs[i], vs[j]);
    return lg.normalize();
  };
  auto placed = [&](const Graph& c) {
    std::uint32_t vm = (1U << c.order()) - 1;
    std::uint64_t em = 0;
    for (auto [u, v] : c.edges()) em |= std::uint64_t{1} << pid[u][v];
    return std::make_pair(vm, em);
  };

  NaiveReach out;
  std::unordered_map<std::pair<std::uint32_t, std::uint64_t>, int, PairHash> seen_labeled;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> frontier;
  Graph start = canonical_form(g);
  out.keys.insert(to_graph6(start));
  frontier.push_back(placed(start));
  for (int level = 2; level <= copies && !frontier.empty(); ++level) {
    std::vector<std::pair<std::uint32_t, std::uint64_t>> next;
    for (auto [sv, se] : frontier)
      for (auto [pv, pe] : placements) {
        auto key = std::make_pair(sv & pv, se & pe);
        if (!seen_labeled.emplace(key, 0).second) continue;
        Graph c = canonical_form(to_graph(key.first, key.second));
        if (out.keys.insert(to_graph6(c)).second) next.push_back(placed(c));
      }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

bool si_oracle_naive(const Graph& g, const Graph& h, int max_copies, int universe) {
  if (max_copies < 1) throw PreconditionError("si_oracle_naive: max_copies must be positive");
  if (universe > 11) throw GuardError("si_oracle_naive: universe is limited to 11 labels");
  if (g.order() > universe || h.order() > g.order()) return false;
  if (si_pattern_cost(universe, g.order()) > 2e6)
    throw GuardError("si_oracle_naive: too many placements of the host");
  static std::mutex mu;
  static std::map<std::tuple<std::string, int, int>, NaiveReach> cache;
  auto key = std::make_tuple(canonical_key(g), max_copies, universe);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second.keys.count(canonical_key(h)) > 0;
  }
  NaiveReach reach = naive_reach(g, max_copies, universe);
  const bool ans = reach.keys.count(canonical_key(h)) > 0;
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, std::move(reach));
  return ans;
}

SiWitness witness_induced(const Graph& g, const VertexList& U) {
  VertexList us = sorted_unique(U);
  for (int u : us)
    if (u < 0 || u >= g.order()) throw PreconditionError("witness_induced: vertex out of range");
  SiWitness w{g, {VertexMap::identity(g.order())}, induced_subgraph(g, us)};
  auto in = membership(g.order(), us);
  int fresh = g.order();
  for (int x = 0; x < g.order(); ++x) {
    if (in[x]) continue;
    VertexMap m = VertexMap::identity(g.order());
    m.image[x] = fresh++;
    w.maps.push_back(std::move(m));
  }
  return w;
}

SiWitness witness_from_local_embeddings(const Graph& h, const Graph& target,
                                        const std::vector<Embedding>& embeddings) {
  const int m = target.order(), n = h.order();
  if (static_cast<int>(embeddings.size()) != m)
    throw PreconditionError("need one embedding per target vertex");
  SiWitness w{h, {}, target};
  for (int v = 0; v < m; ++v) {
    Embedding e = embeddings[v];
    e.mode = EmbedMode::InducedAt;
    e.at = {v};
    std::string why;
    if (!validate_embedding(target, h, e, &why))
      throw PreconditionError("embedding for target vertex " + std::to_string(v) +
                              " is not induced at it: " + why);
    VertexMap a;
    a.image.resize(n);
    for (int x = 0; x < n; ++x) a.image[x] = m + v * n + x;
    for (int i = 0; i < m; ++i) a.image[e.map[i]] = i;
    w.maps.push_back(std::move(a));
  }
  // A single copy would keep all of h; a second placement of the same core
  // on its own outside labels cuts the rest away.
  for (int extra = 0; w.maps.size() < 2; ++extra) {
    VertexMap a;
    a.image.resize(n);
    for (int x = 0; x < n; ++x) a.image[x] = m + (m + extra) * n + x;
    if (m == 1) a.image[embeddings[0].map[0]] = 0;
    w.maps.push_back(std::move(a));
  }
  return w;
}

SiWitness compose_witness(const SiWitness& w1, const SiWitness& w2) {
  const LabeledGraph mid = witness_intersection(w1);
  const Graph mid_graph = mid.normalize();
  auto psi = is_isomorphic(w2.host, mid_graph);
  if (!psi) throw PreconditionError("compose_witness: second host does not match the first result");
  // Host vertex of w2 sitting at each label of the intermediate graph.
  std::map<int, int> at_label;
  for (int x = 0; x < w2.host.order(); ++x) at_label[mid.vertices[(*psi)[x]]] = x;

  std::set<int> outside;
  for (const auto& a : w1.maps)
    for (int l : a.image)
      if (!at_label.count(l)) outside.insert(l);
  int base = 0;
  for (const auto& b : w2.maps) base = std::max(base, b.max_label() + 1);
  std::map<int, int> fresh;
  for (int l : outside) fresh.emplace(l, base + static_cast<int>(fresh.size()));

  SiWitness out{w1.host, {}, w2.claimed};
  for (const auto& a : w1.maps)
    for (const auto& b : w2.maps) {
      VertexMap c;
      c.image.reserve(a.image.size());
      for (int l : a.image) {
        auto it = at_label.find(l);
        c.image.push_back(it != at_label.end() ? b.image[it->second] : fresh.at(l));
      }
      out.maps.push_back(std::move(c));
    }
  return out;
}

}  // namespace sic
