#include <algorithm>

#include "doctest.h"
#include "sic/canonical.hpp"
#include "sic/error.hpp"
#include "sic/generators.hpp"
#include "sic/graph_io.hpp"
#include "sic/random.hpp"
#include "sic/search.hpp"

using namespace sic;

namespace {

// Exhaustive reference for embeddings: try every injective map.
bool brute_embeds(const Graph& p, const Graph& h, EmbedMode mode) {
  const int k = p.order(), n = h.order();
  if (k > n) return false;
  VertexList pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  // Iterate over k-permutations via full permutations with dedupe by prefix.
  std::sort(pick.begin(), pick.end());
  do {
    Embedding e{VertexList(pick.begin(), pick.begin() + k), mode, {}};
    if (validate_embedding(p, h, e)) return true;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

int degree_count(const Graph& g, int d) {
  int c = 0;
  for (int v = 0; v < g.order(); ++v) c += g.degree(v) == d;
  return c;
}

int distance(const Graph& g, int a, int b) {
  auto p = shortest_path(g, a, membership(g.order(), {b}), std::vector<bool>(g.order(), false));
  return static_cast<int>(p.size()) - 1;
}

}  // namespace

TEST_SUITE("graph_core") {
  TEST_CASE("graph rejects loops, duplicates and bad endpoints") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), PreconditionError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), PreconditionError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionError);
    Graph g(3, {{2, 0}});
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(2, 0));
    CHECK(g.edges() == std::vector<Edge>{{0, 2}});
  }

  TEST_CASE("named generators") {
    Graph claw = spider(1, 1, 1);
    CHECK(claw.order() == 4);
    CHECK(claw.size() == 3);
    CHECK(is_isomorphic(claw, biclique(1, 3)));
    CHECK(is_isomorphic(gen_named("Hk", {0}), biclique(1, 4)));

    Graph x3 = gen_named("Xp", {3});
    CHECK(x3.order() == 7);
    CHECK(x3.size() == 11);
    CHECK(x3.neighbors(6) == VertexList{0, 1});
    Graph y3 = gen_named("Yp", {3});
    CHECK(y3.neighbors(6) == VertexList{0, 3});
    CHECK_FALSE(is_isomorphic(x3, y3));

    CHECK(gen_named("tripod_forest", {2}).order() == 14);
    CHECK(components(tripod_forest(2)).size() == 2);
    CHECK_THROWS_AS(gen_named("nope", {}), PreconditionError);
    CHECK_THROWS_AS(gen_named("K", {0}), PreconditionError);
    CHECK_THROWS_AS(gen_named("Hk", {-1}), PreconditionError);
    CHECK_THROWS_AS(gen_named("Kpq", {3}), PreconditionError);
  }

  TEST_CASE("spider legs are numbered from the center") {
    Graph s = spider(2, 1, 3);
    CHECK(s.neighbors(0) == VertexList{1, 3, 4});
    CHECK(s.adjacent(1, 2));
    CHECK(s.adjacent(4, 5));
    CHECK(s.adjacent(5, 6));
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b)
        for (int c = 1; c <= 3; ++c) {
          Graph g = spider(a, b, c);
          CHECK(g.order() == a + b + c + 1);
          CHECK(degree_count(g, 3) == 1);
          CHECK(g.degree(0) == 3);
        }
  }

  TEST_CASE("H_k has two degree-3 vertices at distance k") {
    for (int k = 1; k <= 7; ++k) {
      Graph h = h_graph(k);
      CHECK(h.order() == k + 5);
      CHECK(degree_count(h, 3) == 2);
      CHECK(h.degree(1) == 3);
      CHECK(h.degree(4) == 3);
      CHECK(distance(h, 1, 4) == k);
    }
  }

  TEST_CASE("line graphs") {
    CHECK(is_isomorphic(line_graph(path_graph(4)), path_graph(3)));
    CHECK(is_isomorphic(line_graph(biclique(1, 3)), complete_graph(3)));
    CHECK(line_graph(edgeless(3)).order() == 0);
    // L(S_{2,2,2}): a triangle of the three central edges, each with a pendant.
    Graph expect(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
    CHECK(is_isomorphic(line_graph(spider(2, 2, 2)), expect));
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
      Graph g = random_graph(rng, uniform_int(rng, 0, 9));
      CHECK(line_graph(g).order() == g.size());
    }
  }

  TEST_CASE("disjoint union and induced subgraphs") {
    Graph u = disjoint_union(path_graph(1), path_graph(3));
    CHECK(u.order() == 4);
    CHECK(u.size() == 2);
    CHECK(disjoint_union(std::span<const Graph>{}).order() == 0);
    CHECK(is_isomorphic(induced_subgraph(cycle_graph(4), {0, 1, 3}), path_graph(3)));
    Graph c5 = cycle_graph(5);
    CHECK(induced_subgraph(c5, {0, 1, 2, 3, 4}) == c5);
    CHECK(is_isomorphic(induced_subgraph(biclique(3, 3), {0, 1, 3, 4}), cycle_graph(4)));
    CHECK_THROWS_AS(induced_subgraph(c5, {7}), PreconditionError);
  }

  TEST_CASE("isomorphism") {
    Rng rng(3);
    Graph c5 = cycle_graph(5);
    auto bij = is_isomorphic(c5, shuffle_labels(rng, c5));
    REQUIRE(bij);
    CHECK_FALSE(is_isomorphic(biclique(3, 3), cycle_graph(6)));
    CHECK_FALSE(is_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
    CHECK(is_isomorphic(petersen(), shuffle_labels(rng, petersen())));
  }

  TEST_CASE("isomorphism is an equivalence on a random corpus") {
    Rng rng(5);
    std::vector<Graph> corpus;
    for (int i = 0; i < 40; ++i) {
      Graph g = random_graph(rng, uniform_int(rng, 1, 7));
      corpus.push_back(g);
      corpus.push_back(shuffle_labels(rng, g));
    }
    for (const auto& a : corpus) {
      auto self = is_isomorphic(a, a);
      REQUIRE(self);
      CHECK(validate_embedding(a, a, {*self, EmbedMode::Induced, {}}));
    }
    for (const auto& a : corpus)
      for (const auto& b : corpus) {
        bool ab = is_isomorphic(a, b).has_value();
        CHECK(ab == is_isomorphic(b, a).has_value());
        CHECK(ab == (canonical_key(a) == canonical_key(b)));
      }
  }

  TEST_CASE("embedding search") {
    CHECK(find_embedding(biclique(1, 3), complete_graph(4), EmbedMode::Subgraph));
    CHECK_FALSE(find_embedding(biclique(1, 3), complete_graph(4), EmbedMode::Induced));
    auto e = find_embedding(spider(1, 1, 1), x_graph(5), EmbedMode::Induced);
    REQUIRE(e);
    CHECK(validate_embedding(spider(1, 1, 1), x_graph(5), *e));
    // The middle of P_3 sees no non-edge, an end vertex does.
    auto at = find_embedding(path_graph(3), complete_graph(3), EmbedMode::InducedAt, {1});
    REQUIRE(at);
    CHECK(validate_embedding(path_graph(3), complete_graph(3), *at));
    CHECK_FALSE(find_embedding(path_graph(3), complete_graph(3), EmbedMode::InducedAt, {0}));
  }

  TEST_CASE("embedding search agrees with exhaustive maps") {
    Rng rng(17);
    for (int i = 0; i < 150; ++i) {
      Graph h = random_graph(rng, uniform_int(rng, 1, 6));
      Graph p = random_graph(rng, uniform_int(rng, 1, h.order()));
      for (auto mode : {EmbedMode::Subgraph, EmbedMode::Induced}) {
        auto e = find_embedding(p, h, mode);
        CHECK(e.has_value() == brute_embeds(p, h, mode));
        if (e) CHECK(validate_embedding(p, h, *e));
      }
      if (find_embedding(p, h, EmbedMode::Induced))
        CHECK(find_embedding(p, h, EmbedMode::Subgraph));
    }
  }

  TEST_CASE("edge list and graph6 round trips") {
    Graph g = parse_graph("4 2\n0 1\n2 3\n");
    CHECK(is_isomorphic(g, disjoint_union(path_graph(2), path_graph(2))));
    CHECK(serialize_graph(parse_graph("3 2\n2 1\n0 1\n")) == "3 2\n0 1\n1 2\n");
    CHECK_THROWS_AS(parse_graph("3 1\n0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), ParseError);

    Graph d = parse_graph("D?{");
    CHECK(d.order() == 5);
    CHECK(d.size() == 4);
    CHECK(d.degree(4) == 4);
    CHECK(to_graph6(d) == "D?{");
    CHECK(to_graph6(petersen()) == to_graph6(parse_graph6(to_graph6(petersen()))));

    Rng rng(23);
    for (int i = 0; i < 200; ++i) {
      Graph r = random_graph(rng, uniform_int(rng, 0, 70));
      CHECK(parse_graph(to_graph6(r)) == r);
      CHECK(parse_graph(serialize_graph(r)) == r);
      CHECK(serialize_graph(parse_graph(serialize_graph(r))) == serialize_graph(r));
    }
  }

  TEST_CASE("isomorphism class counts") {
    // Numbers of unlabeled graphs on n vertices.
    const int expected[] = {1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) CHECK(graphs_on(n).size() == static_cast<std::size_t>(expected[n - 1]));
    CHECK(graphs_up_to(6).size() == 208);
  }
}
