#include "doctest.h"
#include "sic/error.hpp"
#include "sic/generators.hpp"
#include "sic/random.hpp"
#include "sic/structure.hpp"

#include <algorithm>
#include <set>

using namespace sic;

namespace {

Graph with_edges(const Graph& g, int extra, const std::vector<Edge>& es) {
  std::vector<Edge> all = g.edges();
  all.insert(all.end(), es.begin(), es.end());
  return Graph(g.order() + extra, all);
}

std::vector<VertexList> subsets(int n) {
  std::vector<VertexList> out;
  for (unsigned m = 0; m < (1U << n); ++m) {
    VertexList s;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1U) s.push_back(v);
    out.push_back(s);
  }
  return out;
}

bool complete_to(const Graph& g, const VertexList& a, const VertexList& b) {
  for (int x : a)
    for (int y : b)
      if (!g.adjacent(x, y)) return false;
  return true;
}

bool induced_biclique(const Graph& g, const VertexList& a, const VertexList& b) {
  return !a.empty() && !b.empty() && set_intersection(a, b).empty() && is_independent(g, a) &&
         is_independent(g, b) && complete_to(g, a, b);
}

}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("twins and modules") {
    auto k33 = false_twin_classes(biclique(3, 3));
    CHECK(k33 == std::vector<VertexList>{{0, 1, 2}, {3, 4, 5}});
    CHECK(false_twin_classes(cycle_graph(5)).size() == 5);
    CHECK(false_twin_classes(edgeless(2)) == std::vector<VertexList>{{0, 1}});

    Graph g = cycle_graph(6);
    CHECK(is_module(g, {0, 1, 2, 3, 4, 5}));
    CHECK(is_module(g, {3}));
    Graph pend = with_edges(biclique(3, 3), 1, {{0, 6}});
    CHECK_FALSE(is_module(pend, {0, 1, 2}));
    CHECK(is_module(pend, {1, 2}));
  }

  TEST_CASE("modular decomposition") {
    auto e = modular_decomposition(edgeless(4));
    CHECK(e.nodes[e.root].kind == MDKind::Parallel);
    CHECK(e.nodes[e.root].children.size() == 4);
    auto k = modular_decomposition(complete_graph(5));
    CHECK(k.nodes[k.root].kind == MDKind::Series);
    auto c5 = modular_decomposition(cycle_graph(5));
    CHECK(c5.nodes[c5.root].kind == MDKind::Prime);
    CHECK(c5.nodes[c5.root].children.size() == 5);
    Rng rng(2);
    for (int i = 0; i < 150; ++i) {
      Graph g = random_graph(rng, uniform_int(rng, 1, 11), uniform_int(rng, 1, 3), 4);
      auto t = modular_decomposition(g);
      std::string why;
      CHECK_MESSAGE(validate_md_tree(g, t, &why), why);
      // Each prime node's children are exactly its maximal proper modules.
      for (const auto& node : t.nodes) {
        if (node.kind != MDKind::Prime) continue;
        for (const auto& s : subsets(static_cast<int>(node.vertices.size()))) {
          if (s.size() < 2 || s.size() == node.vertices.size()) continue;
          VertexList u;
          for (int x : s) u.push_back(node.vertices[x]);
          if (!is_module(induced_subgraph(g, node.vertices), s)) continue;
          bool inside = false;
          for (int c : node.children) {
            const auto& cv = t.nodes[c].vertices;
            if (std::includes(cv.begin(), cv.end(), u.begin(), u.end())) inside = true;
          }
          CHECK(inside);
        }
      }
    }
  }

  TEST_CASE("cut vertices and blocks") {
    CHECK(cut_vertices(path_graph(3)) == VertexList{1});
    CHECK(cut_vertices(cycle_graph(6)).empty());
    Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(cut_vertices(bowtie) == VertexList{2});
    CHECK(biconnected_components(bowtie) == std::vector<VertexList>{{0, 1, 2}, {2, 3, 4}});
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
      Graph g = random_graph(rng, uniform_int(rng, 1, 10), 1, 4);
      VertexList expect;
      const auto base = components(g).size();
      for (int v = 0; v < g.order(); ++v) {
        std::vector<bool> rm(g.order(), false);
        rm[v] = true;
        if (components_avoiding(g, rm).size() > base) expect.push_back(v);
      }
      CHECK(cut_vertices(g) == expect);
      // Every edge lies in exactly one block.
      for (auto [u, v] : g.edges()) {
        int hits = 0;
        for (const auto& b : biconnected_components(g))
          hits += std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v);
        CHECK(hits == 1);
      }
    }
  }

  TEST_CASE("clique cutsets") {
    CHECK(clique_cutsets_upto(path_graph(4), 1) == std::vector<VertexList>{{1}, {2}});
    CHECK(clique_cutsets_upto(cycle_graph(4), 2).empty());
    Graph two_k4(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {0, 5}, {1, 5}, {4, 5}});
    CHECK(clique_cutsets_upto(two_k4, 2) == std::vector<VertexList>{{0, 1}});
    CHECK(clique_cutsets_upto(edgeless(2), 0) == std::vector<VertexList>{{}});
    Rng rng(6);
    for (int i = 0; i < 80; ++i) {
      Graph g = random_graph(rng, uniform_int(rng, 1, 8), 1, 2);
      std::vector<VertexList> expect;
      for (const auto& s : subsets(g.order()))
        if (s.size() <= 3 && is_clique(g, s) && is_cutset(g, s)) expect.push_back(s);
      std::sort(expect.begin(), expect.end(), [](const VertexList& a, const VertexList& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      CHECK(clique_cutsets_upto(g, 3) == expect);
    }
  }

  TEST_CASE("clique separator atoms") {
    Graph diamond_g = diamond();
    auto d = clique_separator_atoms(diamond_g);
    CHECK(d.atoms == std::vector<VertexList>{{0, 1, 2}, {0, 1, 3}});
    CHECK(clique_separator_atoms(cycle_graph(5)).atoms.size() == 1);
    CHECK(clique_separator_atoms(biclique(3, 3)).atoms.size() == 1);
    Rng rng(12);
    for (int i = 0; i < 80; ++i) {
      Graph g = random_graph(rng, uniform_int(rng, 1, 9), uniform_int(rng, 1, 2), 4);
      auto ad = clique_separator_atoms(g);
      VertexList all;
      for (const auto& a : ad.atoms) {
        all = set_union(all, a);
        Graph h = induced_subgraph(g, a);
        CHECK(clique_cutsets_upto(h, h.order()).empty());
      }
      CHECK(static_cast<int>(all.size()) == g.order());
      for (const auto& s : ad.separators) CHECK(is_clique(g, s));
      for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& a : ad.atoms)
          covered |= std::binary_search(a.begin(), a.end(), u) && std::binary_search(a.begin(), a.end(), v);
        CHECK(covered);
      }
    }
  }

  TEST_CASE("minimal separators") {
    CHECK(minimal_separators(cycle_graph(4)) == std::vector<VertexList>{{0, 2}, {1, 3}});
    CHECK(minimal_separators(complete_graph(4)).empty());
  }

  TEST_CASE("maximal cliques and bicliques") {
    auto pc = maximal_cliques(petersen());
    CHECK(pc.size() == 15);
    CHECK(std::all_of(pc.begin(), pc.end(), [](const VertexList& c) { return c.size() == 2; }));
    auto k33 = maximal_induced_bicliques(biclique(3, 3));
    REQUIRE(k33.size() == 1);
    CHECK(k33[0].a == VertexList{0, 1, 2});
    // In C_6 the single edges extend to stars; only the six P_3 stars remain.
    auto c6 = maximal_induced_bicliques(cycle_graph(6));
    CHECK(c6.size() == 6);
    for (const auto& bc : c6) CHECK(bc.a.size() + bc.b.size() == 3);

    Rng rng(7);
    for (int i = 0; i < 60; ++i) {
      Graph g = random_graph(rng, uniform_int(rng, 1, 8), uniform_int(rng, 1, 3), 4);
      std::vector<VertexList> cl;
      auto all = subsets(g.order());
      for (const auto& s : all) {
        if (s.empty() || !is_clique(g, s)) continue;
        bool maximal = true;
        for (int v = 0; v < g.order() && maximal; ++v)
          if (!std::binary_search(s.begin(), s.end(), v) && is_clique(g, set_union(s, {v}))) maximal = false;
        if (maximal) cl.push_back(s);
      }
      std::sort(cl.begin(), cl.end());
      CHECK(maximal_cliques(g) == cl);

      // Bicliques: every labelled split of every subset.
      std::set<std::pair<VertexList, VertexList>> expect;
      for (const auto& a : all)
        for (const auto& b : all) {
          if (a.empty() || b.empty() || a[0] > b[0] || !induced_biclique(g, a, b)) continue;
          bool maximal = true;
          for (int v = 0; v < g.order() && maximal; ++v) {
            if (std::binary_search(a.begin(), a.end(), v) || std::binary_search(b.begin(), b.end(), v)) continue;
            if (induced_biclique(g, set_union(a, {v}), b) || induced_biclique(g, a, set_union(b, {v}))) maximal = false;
          }
          if (maximal) expect.insert({a, b});
        }
      std::set<std::pair<VertexList, VertexList>> got;
      for (const auto& bc : maximal_induced_bicliques(g)) got.insert({bc.a, bc.b});
      CHECK(got == expect);
      std::size_t big = 0;
      for (const auto& [a, b] : expect) big += std::min(a.size(), b.size()) >= 2;
      CHECK(maximal_induced_bicliques(g, 2, 2).size() == big);
    }
  }

  TEST_CASE("large bicliques are modules or refute") {
    auto k55 = certify_theorem31(biclique(5, 5), 1);
    CHECK(std::holds_alternative<ModuleCert>(k55));
    CHECK(check_certificate(biclique(5, 5), 1, k55));

    auto x5 = certify_theorem31(x_graph(5), 1);
    REQUIRE(std::holds_alternative<Refutation>(x5));
    CHECK(check_certificate(x_graph(5), 1, x5));

    VertexList all;
    for (int v = 0; v < 10; ++v) all.push_back(v);
    std::vector<Edge> apex;
    for (int v : all) apex.emplace_back(v, 10);
    Graph cone = with_edges(biclique(5, 5), 1, apex);
    auto cc = certify_theorem31(cone, 1);
    CHECK(std::holds_alternative<ModuleCert>(cc));
    CHECK(check_certificate(cone, 1, cc));

    // Single-neighbour case: 10 - 0 and 10 - 11 - 5.
    Graph tail = with_edges(biclique(5, 5), 2, {{0, 10}, {10, 11}, {11, 5}});
    auto tc = certify_theorem31(tail, 1);
    REQUIRE(std::holds_alternative<Refutation>(tc));
    CHECK(std::get<Refutation>(tc).reason.find("case 2") != std::string::npos);
    CHECK(check_certificate(tail, 1, tc));
    // The path touches the neighbour again before reaching the biclique.
    Graph touch = with_edges(biclique(5, 5), 3, {{0, 10}, {10, 11}, {11, 0}, {11, 12}, {12, 1}});
    auto tt = certify_theorem31(touch, 1);
    CHECK(check_certificate(touch, 1, tt));

    CHECK_THROWS_AS(certify_theorem31(with_edges(biclique(5, 5), 1, {{0, 10}}), 1), PreconditionError);
    auto blocks = certify_theorem31_blocks(with_edges(x_graph(5), 1, {{0, 11}}), 1);
    bool refuted = false;
    for (const auto& c : blocks) {
      refuted |= std::holds_alternative<Refutation>(c);
      CHECK(check_certificate(with_edges(x_graph(5), 1, {{0, 11}}), 1, c));
    }
    CHECK(refuted);
  }

  TEST_CASE("large cliques: complete, K_r-free or refute") {
    CHECK(std::holds_alternative<CompleteCert>(certify_theorem37(complete_graph(7), 1)));
    auto c5 = certify_theorem37(cycle_graph(5), 1);
    REQUIRE(std::holds_alternative<KrFreeCert>(c5));
    CHECK(std::get<KrFreeCert>(c5).r == 6);

    Graph case1 = with_edges(complete_graph(6), 1, {{0, 6}, {1, 6}, {2, 6}});
    Graph case2 = with_edges(complete_graph(6), 2, {{0, 6}, {1, 6}, {6, 7}, {7, 2}});
    Graph case3 = with_edges(complete_graph(6), 3, {{0, 6}, {6, 7}, {7, 1}, {6, 8}, {8, 2}});
    int n = 1;
    for (const Graph& g : {case1, case2, case3}) {
      auto c = certify_theorem37(g, 1);
      REQUIRE(std::holds_alternative<Refutation>(c));
      CHECK(std::get<Refutation>(c).reason.find("case " + std::to_string(n++)) != std::string::npos);
      CHECK(check_certificate(g, 1, c));
      CHECK(si_oracle(g, spider(1, 1, 1)).holds);
    }
    CHECK_THROWS_AS(certify_theorem37(path_graph(4), 1), PreconditionError);
  }

  TEST_CASE("tripod-excluding structure report") {
    CHECK(report_theorem39(complete_graph(9), 1).complete);
    auto c7 = report_theorem39(cycle_graph(7), 1);
    CHECK(c7.hypotheses());
    CHECK(c7.width == 2);
    CHECK(c7.has_kr == false);
    CHECK(c7.has_krr == false);
    CHECK(c7.has_linegraph == false);
    auto p = report_theorem39(petersen(), 1);
    CHECK(p.hypotheses());
    CHECK(p.width == 4);
    auto k33 = report_theorem39(biclique(3, 3), 1);
    CHECK_FALSE(k33.twin_free);
    CHECK_FALSE(k33.width.has_value());
  }
}
