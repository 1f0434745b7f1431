#include "doctest.h"
#include "sic/canonical.hpp"
#include "sic/error.hpp"
#include "sic/generators.hpp"
#include "sic/random.hpp"
#include "sic/treewidth.hpp"

#include <algorithm>
#include <numeric>

using namespace sic;

namespace {

// Minimum over all elimination orders of the largest later-neighbourhood.
int treewidth_by_permutations(const Graph& g) {
  VertexList order(g.order());
  std::iota(order.begin(), order.end(), 0);
  int best = g.order() - 1;
  do {
    best = std::min(best, decomposition_from_order(g, order).width());
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

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

WeightedGraph random_weights(Rng& rng, Graph g) {
  std::vector<Weight> w;
  for (int v = 0; v < g.order(); ++v) w.emplace_back(uniform_int(rng, 0, 6), uniform_int(rng, 1, 3));
  return WeightedGraph(std::move(g), std::move(w));
}

}  // namespace

TEST_SUITE("treewidth") {
  TEST_CASE("closed forms") {
    CHECK(exact_treewidth(path_graph(2)).width == 1);
    CHECK(exact_treewidth(spider(3, 2, 2)).width == 1);
    CHECK(exact_treewidth(cycle_graph(7)).width == 2);
    CHECK(exact_treewidth(biclique(3, 3)).width == 3);
    CHECK(exact_treewidth(complete_graph(5)).width == 4);
    CHECK(exact_treewidth(petersen()).width == 4);
    CHECK(exact_treewidth(grid(3, 3)).width == 3);
    CHECK(exact_treewidth(edgeless(4)).width == 0);
    CHECK(exact_treewidth(Graph(0)).width == -1);
    CHECK(tw_upper_bound(spider(2, 2, 2)).width == 1);
    CHECK(tw_upper_bound(complete_graph(6)).width == 5);
    CHECK(tw_upper_bound(grid(3, 3)).width >= 3);
    CHECK_THROWS_AS(exact_treewidth(path_graph(21)), GuardError);
  }

  TEST_CASE("validation") {
    Graph g = cycle_graph(4);
    TreeDecomposition whole{{{0, 1, 2, 3}}, {}};
    CHECK(validate_decomposition(g, whole));
    CHECK(whole.width() == 3);
    TreeDecomposition missing{{{0, 1, 2}, {0, 2}}, {{0, 1}}};
    std::string why;
    CHECK_FALSE(validate_decomposition(g, missing, &why));
    CHECK(why.find("vertex 3") != std::string::npos);
    TreeDecomposition no_edge{{{0, 1, 2}, {0, 3}}, {{0, 1}}};
    CHECK_FALSE(validate_decomposition(g, no_edge, &why));
    CHECK(why.find("edge 2-3") != std::string::npos);
    TreeDecomposition split{{{0, 1, 3}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
    CHECK_FALSE(validate_decomposition(g, split, &why));
    CHECK(why.find("vertex 3") != std::string::npos);
  }

  TEST_CASE("exact width against all elimination orders") {
    Rng rng(41);
    for (int i = 0; i < 60; ++i) {
      Graph g = random_graph(rng, uniform_int(rng, 1, 7), uniform_int(rng, 1, 3), 4);
      auto r = exact_treewidth(g);
      CHECK(validate_decomposition(g, r.decomposition));
      CHECK(r.width == treewidth_by_permutations(g));
      CHECK(r.width <= tw_upper_bound(g).width);
      // Monotone under induced subgraphs.
      if (g.order() > 1) CHECK(exact_treewidth(remove_vertices(g, {0})).width <= r.width);
    }
  }

  TEST_CASE("independent set dynamic program") {
    WeightedGraph p4(path_graph(4), {3, 1, 1, 3});
    auto s = mwis_treedp(p4, tw_upper_bound(p4.graph).decomposition);
    CHECK(s.weight == 6);
    CHECK(s.set == VertexList{0, 3});
    CHECK(mwis_treedp(WeightedGraph::unit(cycle_graph(5)), exact_treewidth(cycle_graph(5)).decomposition).weight == 2);
    TreeDecomposition bad{{{0, 1}}, {}};
    CHECK_THROWS_AS(mwis_treedp(p4, bad), PreconditionError);

    Rng rng(8);
    for (int i = 0; i < 200; ++i) {
      auto wg = random_weights(rng, random_graph(rng, uniform_int(rng, 1, 10)));
      auto expect = mwis_by_subsets(wg);
      auto got = mwis_treedp(wg, i % 2 ? exact_treewidth(wg.graph).decomposition : tw_upper_bound(wg.graph).decomposition);
      CHECK(got.weight == expect.weight);
      CHECK(got.set == expect.set);
    }
  }
}
