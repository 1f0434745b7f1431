#include "sic/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "sic/graph_io.hpp"
#include "sic/search.hpp"

namespace sic {

namespace {

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  VertexList run() {
    explore(std::vector<int>(n_, 0));
    return best_pos_;
  }

 private:
  bool twins(int u, int v) const {
    for (int x = 0; x < n_; ++x)
      if (x != u && x != v && g_.adjacent(u, x) != g_.adjacent(v, x)) return false;
    return true;
  }

  void leaf(const std::vector<int>& pos) {
    VertexList inv(n_);
    for (int v = 0; v < n_; ++v) inv[pos[v]] = v;
    std::vector<std::uint64_t> code;
    std::uint64_t word = 0;
    int used = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i) {
        word = (word << 1) | (g_.adjacent(inv[i], inv[j]) ? 1U : 0U);
        if (++used == 64) {
          code.push_back(word);
          word = 0;
          used = 0;
        }
      }
    if (used) code.push_back(word << (64 - used));
    if (best_pos_.empty() || code > best_code_) {
      best_code_ = std::move(code);
      best_pos_ = pos;
    }
  }

  void explore(std::vector<int> colours) {
    colours = refine_colours(g_, std::move(colours));
    std::vector<int> count(n_, 0);
    for (int c : colours) ++count[c];
    int cell = -1;
    for (int c = 0; c < n_ && cell < 0; ++c)
      if (count[c] > 1) cell = c;
    if (cell < 0) {
      leaf(colours);
      return;
    }
    VertexList tried;
    for (int v = 0; v < n_; ++v) {
      if (colours[v] != cell) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);
      std::vector<int> next(n_);
      for (int x = 0; x < n_; ++x) next[x] = 2 * colours[x] + (x == v ? 0 : 1);
      explore(std::move(next));
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint64_t> best_code_;
  VertexList best_pos_;
};

}  // namespace

Graph canonical_form(const Graph& g) {
  if (g.order() == 0) return g;
  return relabel(g, Canonizer(g).run()).renamed(g.name());
}

std::string canonical_key(const Graph& g) { return to_graph6(canonical_form(g)); }

namespace {

// Classes on n vertices: every graph arises from one on n-1 vertices by
// adding a vertex with some neighbourhood.
std::vector<Graph> extend(const std::vector<Graph>& level, int n) {
  std::map<std::string, Graph> seen;
  if (n == 1) seen.emplace(to_graph6(Graph(1)), Graph(1));
  for (const Graph& base : level)
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
      auto es = base.edges();
      for (int v = 0; v < n - 1; ++v)
        if (mask >> v & 1U) es.emplace_back(v, n - 1);
      Graph c = canonical_form(Graph(n, std::move(es)));
      seen.emplace(to_graph6(c), c);
    }
  std::vector<Graph> out;
  for (auto& [k, g] : seen) out.push_back(g);
  return out;
}

}  // namespace

std::vector<Graph> graphs_on(int n) {
  std::vector<Graph> level;
  for (int k = 1; k <= n; ++k) level = extend(level, k);
  return level;
}

std::vector<Graph> graphs_up_to(int nmax) {
  std::vector<Graph> all, level;
  for (int n = 1; n <= nmax; ++n) {
    level = extend(level, n);
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

}  // namespace sic
