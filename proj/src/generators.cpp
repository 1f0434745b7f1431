#include "sic/generators.hpp"

#include <string>

#include "sic/error.hpp"

namespace sic {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

std::string suffix(const std::vector<int>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? "," : "") + std::to_string(ps[i]);
  return s;
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 1, "K: order must be positive");
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph(n, std::move(es), "K" + std::to_string(n));
}

Graph biclique(int p, int q) {
  require(p >= 1 && q >= 1, "Kpq: part sizes must be positive");
  std::vector<Edge> es;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < q; ++b) es.emplace_back(a, p + b);
  return Graph(p + q, std::move(es), "K" + std::to_string(p) + "," + std::to_string(q));
}

Graph path_graph(int n) {
  require(n >= 1, "P: order must be positive");
  std::vector<Edge> es;
  for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return Graph(n, std::move(es), "P" + std::to_string(n));
}

Graph cycle_graph(int n) {
  require(n >= 3, "C: order must be at least 3");
  std::vector<Edge> es;
  for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  es.emplace_back(0, n - 1);
  return Graph(n, std::move(es), "C" + std::to_string(n));
}

Graph spider(int a, int b, int c) {
  require(a >= 0 && b >= 0 && c >= 0, "spider: leg lengths must be nonnegative");
  std::vector<Edge> es;
  int next = 1;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      es.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, std::move(es), "S" + suffix({a, b, c}));
}

Graph spiders(int t, int a, int b, int c) {
  require(t >= 1, "spiders: count must be positive");
  std::vector<Graph> parts(t, spider(a, b, c));
  return disjoint_union(parts).renamed(std::to_string(t) + "S" + suffix({a, b, c}));
}

Graph tripod_forest(int t) {
  require(t >= 1, "tripod_forest: t must be positive");
  return spiders(t, t, t, t);
}

Graph x_graph(int p) {
  require(p >= 2, "Xp: p must be at least 2");
  Graph k = biclique(p, p);
  auto es = k.edges();
  es.emplace_back(0, 2 * p);
  es.emplace_back(1, 2 * p);
  return Graph(2 * p + 1, std::move(es), "X" + std::to_string(p));
}

Graph y_graph(int p) {
  require(p >= 1, "Yp: p must be positive");
  Graph k = biclique(p, p);
  auto es = k.edges();
  es.emplace_back(0, 2 * p);
  es.emplace_back(p, 2 * p);
  return Graph(2 * p + 1, std::move(es), "Y" + std::to_string(p));
}

Graph h_graph(int k) {
  require(k >= 0, "Hk: k must be nonnegative");
  if (k == 0) return biclique(1, 4).renamed("H0");
  std::vector<Edge> es{{0, 1}, {1, 2}, {3, 4}, {4, 5}};
  int prev = 1;
  for (int i = 0; i + 1 < k; ++i) {
    es.emplace_back(prev, 6 + i);
    prev = 6 + i;
  }
  es.emplace_back(prev, 4);
  return Graph(k + 5, std::move(es), "H" + std::to_string(k));
}

Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}, "paw"); }

Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}, "diamond"); }

Graph edgeless(int n) {
  require(n >= 0, "edgeless: order must be nonnegative");
  return Graph(n, {}, "E" + std::to_string(n));
}

Graph petersen() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, std::move(es), "petersen");
}

Graph grid(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid: dimensions must be positive");
  std::vector<Edge> es;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) es.emplace_back(v, v + 1);
      if (r + 1 < rows) es.emplace_back(v, v + cols);
    }
  return Graph(rows * cols, std::move(es), "grid" + suffix({rows, cols}));
}

std::vector<std::string> named_families() {
  return {"K",  "Kpq", "P",     "C",       "spider",  "spiders",  "tripod_forest", "Xp",
          "Yp", "Hk",  "paw",   "diamond", "edgeless", "petersen", "grid"};
}

Graph gen_named(const std::string& family, const std::vector<int>& ps) {
  auto need = [&](std::size_t k) {
    if (ps.size() != k)
      throw PreconditionError(family + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (family == "K") return need(1), complete_graph(ps[0]);
  if (family == "Kpq") return need(2), biclique(ps[0], ps[1]);
  if (family == "P") return need(1), path_graph(ps[0]);
  if (family == "C") return need(1), cycle_graph(ps[0]);
  if (family == "spider") return need(3), spider(ps[0], ps[1], ps[2]);
  if (family == "spiders") return need(4), spiders(ps[0], ps[1], ps[2], ps[3]);
  if (family == "tripod_forest") return need(1), tripod_forest(ps[0]);
  if (family == "Xp") return need(1), x_graph(ps[0]);
  if (family == "Yp") return need(1), y_graph(ps[0]);
  if (family == "Hk") return need(1), h_graph(ps[0]);
  if (family == "paw") return need(0), paw();
  if (family == "diamond") return need(0), diamond();
  if (family == "edgeless") return need(1), edgeless(ps[0]);
  if (family == "petersen") return need(0), petersen();
  if (family == "grid") return need(2), grid(ps[0], ps[1]);
  throw PreconditionError("unknown graph family: " + family);
}

}  // namespace sic
