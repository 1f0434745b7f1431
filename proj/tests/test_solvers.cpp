#include "doctest.h"
#include "sic/canonical.hpp"
#include "sic/error.hpp"
#include "sic/generators.hpp"
#include "sic/random.hpp"
#include "sic/si.hpp"
#include "sic/solvers.hpp"

#include <algorithm>
#include <functional>

using namespace sic;

namespace {

Graph p1p3() { return disjoint_union(path_graph(1), path_graph(3)); }

Score mwis_by_subsets(const WeightedGraph& wg) {
  const int n = wg.graph.order();
  Score best;
  for (unsigned m = 0; m < (1U << n); ++m) {
    VertexList s;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1U) s.push_back(v);
    if (!is_independent(wg.graph, s)) continue;
    Score c = Score::of(wg, s);
    if (better(c, best)) best = c;
  }
  return best;
}

std::size_t mim_by_subsets(const Graph& g) {
  const auto& es = g.edges();
  std::size_t best = 0;
  for (unsigned m = 0; m < (1U << es.size()); ++m) {
    std::vector<Edge> pick;
    for (std::size_t i = 0; i < es.size(); ++i)
      if (m >> i & 1U) pick.push_back(es[i]);
    bool ok = true;
    for (std::size_t i = 0; i < pick.size() && ok; ++i)
      for (std::size_t j = i + 1; j < pick.size() && ok; ++j) {
        auto [a, b] = pick[i];
        auto [c, d] = pick[j];
        ok = a != c && a != d && b != c && b != d && !g.adjacent(a, c) && !g.adjacent(a, d) &&
             !g.adjacent(b, c) && !g.adjacent(b, d);
      }
    if (ok) best = std::max(best, pick.size());
  }
  return best;
}

void check_trace(const TraceNode& t) {
  if (t.children.empty()) {
    CHECK((t.step == "complete" || t.step == "tree-dp" || t.step == "memo" || t.step == "empty"));
  }
  for (const auto& c : t.children) check_trace(c);
}

}  // namespace

TEST_SUITE("solvers") {
  TEST_CASE("mwis examples") {
    WeightedGraph k5(complete_graph(5), {1, 2, 3, 4, 5});
    auto r = mwis(k5);
    CHECK(r.best.weight == 5);
    CHECK(r.best.set == VertexList{4});
    CHECK(r.trace.step == "complete");

    auto two = mwis(WeightedGraph::unit(disjoint_union(biclique(3, 3), biclique(3, 3))));
    CHECK(two.best.weight == 6);
    CHECK(two.trace.step == "parallel");

    CHECK(mwis(WeightedGraph::unit(cycle_graph(5))).best.weight == 2);
    CHECK(mwis(WeightedGraph::unit(petersen())).best.weight == 4);
    CHECK(mwis(WeightedGraph::unit(Graph(0))).best.weight == 0);
    CHECK(max_trace_width(mwis(WeightedGraph::unit(cycle_graph(7))).trace) == 2);
  }

  TEST_CASE("brute force examples") {
    CHECK(mwis_bruteforce(WeightedGraph::unit(cycle_graph(5))).weight == 2);
    auto star = mwis_bruteforce(WeightedGraph::unit(biclique(1, 6)));
    CHECK(star.weight == 6);
    CHECK(star.set == VertexList{1, 2, 3, 4, 5, 6});
    auto zero = mwis_bruteforce(WeightedGraph(edgeless(3), {0, 1, 0}));
    CHECK(zero.set == VertexList{1});
    CHECK(mwis_bruteforce(WeightedGraph::unit(Graph(0))).set.empty());
    CHECK_THROWS_AS(mwis_bruteforce(WeightedGraph::unit(edgeless(23))), GuardError);
  }

  TEST_CASE("pipeline against brute force") {
    Rng rng(4101);
    for (int i = 0; i < 1000; ++i) {
      int n = uniform_int(rng, 1, 9);
      Graph g = random_graph(rng, n, uniform_int(rng, 1, 4), 5);
      std::vector<Weight> w;
      for (int v = 0; v < n; ++v) w.emplace_back(uniform_int(rng, 0, 7), uniform_int(rng, 1, 4));
      WeightedGraph wg(g, w);
      auto r = mwis(wg);
      Score oracle = mwis_by_subsets(wg);
      CHECK(r.best.weight == oracle.weight);
      CHECK(is_independent(g, r.best.set));
      CHECK(wg.weight_of(r.best.set) == oracle.weight);
      CHECK(mwis_bruteforce(wg).set == oracle.set);
      CHECK(r.trace.weight == oracle.weight);
      check_trace(r.trace);
    }
  }

  TEST_CASE("induced matching") {
    CHECK(mim_bruteforce(cycle_graph(6)).edges.size() == 2);
    auto p5 = mim_bruteforce(path_graph(5));
    CHECK(p5.edges == std::vector<Edge>{{0, 1}, {3, 4}});
    CHECK(mim_bruteforce(complete_graph(4)).edges.size() == 1);
    CHECK_THROWS_AS(mim_bruteforce(complete_graph(8)), GuardError);
    Rng rng(77);
    for (int i = 0; i < 150; ++i) {
      Graph g = random_graph(rng, uniform_int(rng, 2, 8), 1, 3);
      if (g.size() > 16) continue;
      CHECK(mim_bruteforce(g).edges.size() == mim_by_subsets(g));
    }
  }

  TEST_CASE("class membership") {
    const std::vector<Graph> m{p1p3()};
    CHECK(class_membership(cycle_graph(4), {m, Relation::Si}));
    CHECK_FALSE(class_membership(complete_graph(4), {m, Relation::Subgraph}));
    CHECK(class_membership(complete_graph(4), {m, Relation::Si}));
    CHECK_FALSE(class_membership(path_graph(4), {m, Relation::Si}));
    CHECK(class_membership(path_graph(4), {m, Relation::Induced}));
    CHECK_THROWS_AS(class_membership(path_graph(2), {{}, Relation::Si}), PreconditionError);
  }

  TEST_CASE("membership chain") {
    Rng rng(9);
    for (int i = 0; i < 200; ++i) {
      Graph g = random_graph(rng, uniform_int(rng, 1, 6));
      Graph f = random_graph(rng, uniform_int(rng, 1, 4));
      bool sub = class_membership(g, {{f}, Relation::Subgraph});
      bool si = class_membership(g, {{f}, Relation::Si});
      bool ind = class_membership(g, {{f}, Relation::Induced});
      if (sub) CHECK(si);
      if (si) CHECK(ind);
    }
  }

  TEST_CASE("probe equalities") {
    const std::vector<Graph> m{p1p3()};
    auto rep = class_probe(m, 6);
    CHECK(rep.rows.size() == 156 + 34 + 11 + 4 + 2 + 1);
    std::vector<Graph> si_ref{p1p3(), path_graph(4), paw(), diamond()};
    std::vector<Graph> sub_ref{disjoint_union(complete_graph(3), path_graph(1)),
                               cycle_graph(4),
                               biclique(1, 3),
                               p1p3(),
                               path_graph(4),
                               paw(),
                               diamond(),
                               complete_graph(4)};
    // Three bicliques avoid the four induced obstructions yet self-intersect
    // to P_1+P_3; the witness below is checked on its own.
    auto si_off = probe_mismatches(rep, Relation::Si, si_ref);
    std::vector<std::string> expected{canonical_key(biclique(2, 3)), canonical_key(biclique(2, 4)),
                                      canonical_key(biclique(3, 3))};
    std::sort(si_off.begin(), si_off.end());
    std::sort(expected.begin(), expected.end());
    CHECK(si_off == expected);
    SiWitness k23{biclique(2, 3), {VertexMap{{0, 1, 2, 3, 4}}, VertexMap{{2, 1, 0, 3, 4}}, VertexMap{{0, 1, 5, 3, 4}}},
                  p1p3()};
    CHECK(verify_witness(k23));
    CHECK(class_membership(biclique(2, 3), {si_ref, Relation::Induced}));
    CHECK(probe_mismatches(rep, Relation::Subgraph, sub_ref).empty());
    CHECK(probe_mismatches(rep, Relation::Induced, m).empty());
    CHECK(probe_mismatches(rep, Relation::Si, m).size() > 0);

    auto small = class_probe({edgeless(3), path_graph(3)}, 2);
    for (const auto& row : small.rows) {
      CHECK(row.induced == row.si);
      CHECK(row.si == row.subgraph);
    }
    CHECK_THROWS_AS(class_probe(m, 8), GuardError);
  }

  TEST_CASE("tripods") {
    CHECK(is_tripod_forest(spider(1, 1, 1)) == 1);
    CHECK(is_tripod_forest(path_graph(7)) == 3);
    CHECK(is_tripod_forest(path_graph(5)) == 2);
    CHECK_FALSE(is_tripod_forest(cycle_graph(4)));
    CHECK_FALSE(is_tripod_forest(biclique(1, 4)));
    CHECK_FALSE(is_tripod_forest(h_graph(1)));
    CHECK(is_tripod_forest(p1p3()) == 2);
    CHECK(is_tripod_forest(tripod_forest(3)) == 3);
  }

  TEST_CASE("S_k membership") {
    for (int k = 3; k <= 8; ++k) CHECK(sk_membership(spider(5, 5, 5), k));
    CHECK_FALSE(sk_membership(cycle_graph(5), 5));
    CHECK(sk_membership(cycle_graph(5), 4));
    CHECK_FALSE(sk_membership(h_graph(3), 3));
    CHECK_THROWS_AS(sk_membership(h_graph(3), 2), PreconditionError);
  }

  TEST_CASE("girth") {
    CHECK(girth(path_graph(5)) == 0);
    CHECK(girth(cycle_graph(7)) == 7);
    CHECK(girth(petersen()) == 5);
    CHECK(girth(biclique(3, 3)) == 4);
    CHECK(girth(complete_graph(4)) == 3);
  }

  TEST_CASE("dichotomy") {
    auto poly = dichotomy_classify({p1p3()});
    CHECK(poly.poly);
    CHECK(poly.t == 2);
    REQUIRE(poly.embedding);
    CHECK(validate_embedding(p1p3(), tripod_forest(2), *poly.embedding));

    auto c4 = dichotomy_classify({cycle_graph(4)});
    CHECK_FALSE(c4.poly);
    CHECK(c4.r == 4);
    CHECK(c4.obstructions == std::vector<std::string>{"C4"});

    auto claw4 = dichotomy_classify({biclique(1, 4)});
    CHECK_FALSE(claw4.poly);
    CHECK(claw4.r == 3);
    CHECK(claw4.obstructions == std::vector<std::string>{"H0"});

    auto h = dichotomy_classify({h_graph(5), cycle_graph(3)});
    CHECK(h.r == 5);
    CHECK_THROWS_AS(dichotomy_classify({}), PreconditionError);
  }

  TEST_CASE("dichotomy verdicts are consistent") {
    Rng rng(31);
    for (int i = 0; i < 60; ++i) {
      Graph f = random_graph(rng, uniform_int(rng, 2, 7), 1, 3);
      auto v = dichotomy_classify({f});
      if (v.poly) {
        CHECK(find_embedding(f, tripod_forest(v.t), EmbedMode::Induced));
      } else {
        CHECK_FALSE(sk_membership(f, v.r));
        if (v.r > 3) CHECK(sk_membership(f, v.r - 1));
      }
    }
  }
}
