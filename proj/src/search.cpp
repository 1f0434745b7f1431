#include "sic/search.hpp"

#include <algorithm>

#include "sic/error.hpp"

namespace sic {

std::string to_string(EmbedMode m) {
  switch (m) {
    case EmbedMode::Subgraph: return "subgraph";
    case EmbedMode::Induced: return "induced";
    case EmbedMode::InducedAt: return "induced-at";
  }
  return "?";
}

std::vector<int> refine_colours(const Graph& g, std::vector<int> colours) {
  const int n = g.order();
  int classes = -1;
  while (true) {
    std::vector<std::pair<std::pair<int, std::vector<int>>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> around;
      for (int w : g.neighbors(v)) around.push_back(colours[w]);
      std::sort(around.begin(), around.end());
      sig[v] = {{colours[v], std::move(around)}, v};
    }
    std::sort(sig.begin(), sig.end());
    std::vector<int> next(n);
    int id = -1;
    for (int i = 0; i < n; ++i) {
      if (i == 0 || sig[i].first != sig[i - 1].first) ++id;
      next[sig[i].second] = id;
    }
    colours = std::move(next);
    if (id + 1 == classes) return colours;
    classes = id + 1;
  }
}

bool validate_embedding(const Graph& pattern, const Graph& host, const Embedding& e,
                        std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const int k = pattern.order();
  if (static_cast<int>(e.map.size()) != k) return fail("map size differs from pattern order");
  std::vector<bool> used(host.order(), false);
  for (int i = 0; i < k; ++i) {
    int x = e.map[i];
    if (x < 0 || x >= host.order()) return fail("image of " + std::to_string(i) + " out of range");
    if (used[x]) return fail("map not injective at host vertex " + std::to_string(x));
    used[x] = true;
  }
  auto at = membership(k, e.at);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const bool pe = pattern.adjacent(i, j);
      const bool he = host.adjacent(e.map[i], e.map[j]);
      const std::string pair = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (pe && !he) return fail("edge " + pair + " not mapped to an edge");
      const bool strict = e.mode == EmbedMode::Induced ||
                          (e.mode == EmbedMode::InducedAt && (at[i] || at[j]));
      if (!pe && he && strict) return fail("non-edge " + pair + " mapped to an edge");
    }
  return true;
}

namespace {

class Searcher {
 public:
  Searcher(const Graph& pattern, const Graph& host, EmbedMode mode, const VertexList& at,
           const std::vector<Bits>* initial)
      : k_(pattern.order()), prow_(pattern.rows()), hrow_(host.rows()) {
    const int n = host.order();
    strict_.assign(k_, Bits{});
    if (mode == EmbedMode::Induced) {
      for (int p = 0; p < k_; ++p) strict_[p] = Bits::range(k_);
    } else if (mode == EmbedMode::InducedAt) {
      Bits s;
      for (int v : at) {
        if (v < 0 || v >= k_) throw PreconditionError("induced-at vertex out of range");
        s.set(v);
      }
      for (int p = 0; p < k_; ++p) strict_[p] = s.test(p) ? Bits::range(k_) : s;
    }
    for (int p = 0; p < k_; ++p) strict_[p].reset(p);
    if (initial) {
      dom_ = *initial;
    } else {
      dom_.assign(k_, Bits{});
      for (int p = 0; p < k_; ++p)
        for (int h = 0; h < n; ++h)
          if (host.degree(h) >= pattern.degree(p)) dom_[p].set(h);
    }
    map_.assign(k_, -1);
  }

  void set_budget(long long b) { budget_ = b; }
  bool gave_up() const { return gave_up_; }

  long long run(const std::function<bool(const VertexList&)>& visit) {
    visit_ = &visit;
    for (const auto& d : dom_)
      if (d.none()) return 0;
    search(dom_, 0);
    return found_;
  }

 private:
  // Returns false once the search must stop.
  bool search(const std::vector<Bits>& dom, int depth) {
    if (budget_ >= 0 && ++nodes_ > budget_) {
      gave_up_ = true;
      return false;
    }
    if (depth == k_) {
      ++found_;
      return (*visit_)(map_);
    }
    int best = -1, best_count = 0;
    for (int p = 0; p < k_; ++p) {
      if (map_[p] >= 0) continue;
      int c = dom[p].count();
      if (best < 0 || c < best_count) {
        best = p;
        best_count = c;
      }
    }
    const int p = best;
    for (int h : dom[p]) {
      std::vector<Bits> next = dom;
      bool ok = true;
      for (int q = 0; q < k_ && ok; ++q) {
        if (map_[q] >= 0 || q == p) continue;
        if (prow_[p].test(q)) {
          next[q] &= hrow_[h];
        } else if (strict_[p].test(q)) {
          next[q] -= hrow_[h];
        }
        next[q].reset(h);
        ok = next[q].any();
      }
      if (!ok) continue;
      map_[p] = h;
      const bool go_on = search(next, depth + 1);
      map_[p] = -1;
      if (!go_on) return false;
    }
    return true;
  }

  int k_;
  std::vector<Bits> prow_, hrow_, strict_, dom_;
  VertexList map_;
  const std::function<bool(const VertexList&)>* visit_ = nullptr;
  long long budget_ = -1, nodes_ = 0, found_ = 0;
  bool gave_up_ = false;
};

}  // namespace

std::optional<VertexList> is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  const int n = g.order();
  if (n == 0) return VertexList{};
  auto col = refine_colours(disjoint_union(g, h), std::vector<int>(2 * n, 0));
  std::vector<int> cg(col.begin(), col.begin() + n), ch(col.begin() + n, col.end());
  auto sg = cg, sh = ch;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return std::nullopt;
  std::vector<Bits> dom(n);
  for (int p = 0; p < n; ++p)
    for (int x = 0; x < n; ++x)
      if (cg[p] == ch[x]) dom[p].set(x);
  std::optional<VertexList> out;
  Searcher s(g, h, EmbedMode::Induced, {}, &dom);
  s.run([&](const VertexList& m) {
    out = m;
    return false;
  });
  return out;
}

std::optional<Embedding> find_embedding_bounded(const Graph& pattern, const Graph& host,
                                                EmbedMode mode, const VertexList& at,
                                                long long node_budget, bool* gave_up) {
  if (gave_up) *gave_up = false;
  if (pattern.order() > host.order()) return std::nullopt;
  std::optional<Embedding> out;
  Searcher s(pattern, host, mode, at, nullptr);
  s.set_budget(node_budget);
  s.run([&](const VertexList& m) {
    out = Embedding{m, mode, mode == EmbedMode::InducedAt ? sorted_unique(at) : VertexList{}};
    return false;
  });
  if (gave_up) *gave_up = s.gave_up();
  return out;
}

std::optional<Embedding> find_embedding(const Graph& pattern, const Graph& host, EmbedMode mode,
                                        const VertexList& at) {
  return find_embedding_bounded(pattern, host, mode, at, -1, nullptr);
}

long long for_each_embedding(const Graph& pattern, const Graph& host, EmbedMode mode,
                             const std::function<bool(const VertexList&)>& visit) {
  if (pattern.order() > host.order()) return 0;
  Searcher s(pattern, host, mode, {}, nullptr);
  return s.run(visit);
}

}  // namespace sic
