#include "doctest.h"
#include "sic/canonical.hpp"
#include "sic/error.hpp"
#include "sic/generators.hpp"
#include "sic/random.hpp"
#include "sic/si.hpp"
#include "sic/witness_io.hpp"

using namespace sic;

namespace {

LabeledGraph labeled(VertexList vs, std::vector<Edge> es) {
  return LabeledGraph{std::move(vs), std::move(es)};
}

bool si(const Graph& g, const Graph& h) { return si_oracle(g, h).holds; }

Graph p1p3() { return disjoint_union(path_graph(1), path_graph(3)); }

}  // namespace

TEST_SUITE("si_engine") {
  TEST_CASE("apply_map and intersect") {
    Graph c4 = cycle_graph(4);
    auto id = apply_map(c4, VertexMap::identity(4));
    CHECK(id.vertices == VertexList{0, 1, 2, 3});
    CHECK(id.normalize() == c4);
    auto shifted = apply_map(path_graph(3), VertexMap{{5, 6, 7}});
    CHECK(shifted.vertices == VertexList{5, 6, 7});
    CHECK(shifted.edges == std::vector<Edge>{{5, 6}, {6, 7}});
    auto moved = apply_map(path_graph(2), VertexMap{{7, 0}});
    CHECK(moved.edges == std::vector<Edge>{{0, 7}});
    CHECK_THROWS_AS(apply_map(path_graph(2), VertexMap{{1, 1}}), PreconditionError);

    CHECK(intersect(id, id).normalize() == c4);
    auto a = labeled({0, 1, 2, 3}, {{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    auto b = labeled({2, 3, 4, 5}, {{2, 3}, {2, 5}, {3, 4}, {4, 5}});
    auto ab = intersect(a, b);
    CHECK(ab.vertices == VertexList{2, 3});
    CHECK(ab.edges == std::vector<Edge>{{2, 3}});
    auto k3 = apply_map(complete_graph(3), VertexMap::identity(3));
    auto p3 = apply_map(path_graph(3), VertexMap::identity(3));
    CHECK(intersect(k3, p3).normalize() == path_graph(3));
  }

  TEST_CASE("evaluate and verify") {
    SiWitness single{cycle_graph(5), {VertexMap::identity(5)}, cycle_graph(5)};
    CHECK(evaluate_witness(single) == cycle_graph(5));
    CHECK(verify_witness(single));
    SiWitness wrong = single;
    wrong.claimed = path_graph(5);
    std::string why;
    CHECK_FALSE(verify_witness(wrong, &why));
    CHECK(why.find("edges") != std::string::npos);

    auto w = witness_induced(path_graph(4), {0, 1, 3});
    CHECK(evaluate_witness(w) == induced_subgraph(path_graph(4), {0, 1, 3}));
    CHECK(verify_witness(w));
  }

  TEST_CASE("witness_induced") {
    CHECK(is_isomorphic(evaluate_witness(witness_induced(cycle_graph(5), {0, 1, 2, 3})), path_graph(4)));
    CHECK(is_isomorphic(evaluate_witness(witness_induced(complete_graph(4), {1, 2, 3})),
                        complete_graph(3)));
    // Diamond: 2 and 3 have degree 2, 0 has degree 3.
    auto w = witness_induced(diamond(), {0, 2, 3});
    CHECK(is_isomorphic(evaluate_witness(w), path_graph(3)));
    CHECK(witness_induced(diamond(), {0, 1, 2, 3}).maps.size() == 1);
    Rng rng(41);
    for (int i = 0; i < 60; ++i) {
      Graph g = random_graph(rng, uniform_int(rng, 1, 8));
      VertexList u;
      for (int v = 0; v < g.order(); ++v)
        if (coin(rng, 1, 2)) u.push_back(v);
      CHECK(verify_witness(witness_induced(g, u)));
    }
  }

  TEST_CASE("derived oracle examples") {
    CHECK_FALSE(si(complete_graph(3), path_graph(3)));
    CHECK(si(biclique(1, 4), biclique(1, 3)));
    CHECK(si(path_graph(4), p1p3()));
    CHECK_FALSE(si(cycle_graph(4), p1p3()));
    CHECK(si(path_graph(3), disjoint_union(path_graph(2), path_graph(1))));
    CHECK_THROWS_AS(si_oracle(complete_graph(14), edgeless(9)), GuardError);
    SiOptions loose;
    loose.cost_cap = 1e12;
    CHECK(si_oracle(complete_graph(12), complete_graph(9), loose).holds);
  }

  TEST_CASE("derived oracle witnesses verify") {
    for (const Graph& g : graphs_up_to(5))
      for (const Graph& h : graphs_up_to(g.order())) {
        auto r = si_oracle(g, h);
        if (!r.holds) continue;
        REQUIRE(r.witness);
        std::string why;
        CHECK_MESSAGE(verify_witness(*r.witness, &why), why);
      }
  }

  TEST_CASE("naive oracle examples") {
    CHECK(si_oracle_naive(complete_graph(3), complete_graph(2), 2, 6));
    CHECK_FALSE(si_oracle_naive(complete_graph(3), path_graph(3), 3, 6));
    CHECK(si_oracle_naive(path_graph(4), p1p3(), 4, 8));
    CHECK_FALSE(si_oracle_naive(cycle_graph(4), p1p3(), 4, 8));
    CHECK_THROWS_AS(si_oracle_naive(path_graph(3), path_graph(2), 2, 12), GuardError);
  }

  TEST_CASE("oracles agree up to three host vertices") {
    for (const Graph& g : graphs_up_to(3))
      for (const Graph& h : graphs_up_to(g.order()))
        CHECK(si(g, h) == si_oracle_naive(g, h, 4, 2 * g.order()));
  }

  TEST_CASE("relation properties") {
    auto small = graphs_up_to(4);
    for (const Graph& g : small) {
      CHECK(si(g, g));
      for (const Graph& h : small) {
        if (h.order() > g.order()) continue;
        bool rel = si(g, h);
        if (rel) CHECK(find_embedding(h, g, EmbedMode::Subgraph));
        if (find_embedding(h, g, EmbedMode::Induced)) CHECK(rel);
      }
    }
    for (int n = 1; n <= 5; ++n)
      for (const Graph& h : graphs_up_to(n))
        CHECK(si(complete_graph(n), h) == is_complete(h));
  }

  TEST_CASE("transitivity on four vertices") {
    auto small = graphs_up_to(4);
    for (const Graph& g : small)
      for (const Graph& m : small) {
        if (m.order() > g.order() || !si(g, m)) continue;
        for (const Graph& f : small)
          if (f.order() <= m.order() && si(m, f)) CHECK(si(g, f));
      }
  }

  TEST_CASE("composition") {
    auto w1 = witness_induced(complete_graph(4), {0, 1, 2});
    auto w2 = witness_induced(complete_graph(3), {0, 1});
    auto c = compose_witness(w1, w2);
    CHECK(c.maps.size() == w1.maps.size() * w2.maps.size());
    CHECK(verify_witness(c));
    CHECK(is_isomorphic(evaluate_witness(c), complete_graph(2)));

    SiWitness id{path_graph(4), {VertexMap::identity(4)}, path_graph(4)};
    auto r = si_oracle(path_graph(4), p1p3());
    REQUIRE(r.witness);
    auto c2 = compose_witness(id, *r.witness);
    CHECK(verify_witness(c2));
    CHECK(c2.maps.size() == r.witness->maps.size());

    // Random chains g -> m -> f from the derived oracle.
    Rng rng(9);
    int composed = 0;
    for (int i = 0; i < 200 && composed < 40; ++i) {
      Graph g = random_graph(rng, uniform_int(rng, 3, 6));
      Graph m = random_graph(rng, uniform_int(rng, 2, g.order()));
      Graph f = random_graph(rng, uniform_int(rng, 1, m.order()));
      auto gm = si_oracle(g, m), mf = si_oracle(m, f);
      if (!gm.holds || !mf.holds) continue;
      auto gf = compose_witness(*gm.witness, *mf.witness);
      std::string why;
      CHECK_MESSAGE(verify_witness(gf, &why), why);
      ++composed;
    }
    CHECK(composed > 10);
    CHECK_THROWS_AS(compose_witness(w1, witness_induced(cycle_graph(4), {0})), PreconditionError);
  }

  TEST_CASE("local embeddings") {
    Graph g = cycle_graph(6);
    Graph target = path_graph(3);
    auto e = find_embedding(target, g, EmbedMode::Induced);
    REQUIRE(e);
    std::vector<Embedding> es(3, *e);
    auto w = witness_from_local_embeddings(g, target, es);
    CHECK(verify_witness(w));

    Graph x5 = x_graph(5), claw = spider(1, 1, 1);
    std::vector<Embedding> local;
    for (int v = 0; v < 4; ++v) {
      auto ev = find_embedding(claw, x5, EmbedMode::InducedAt, {v});
      REQUIRE(ev);
      local.push_back(*ev);
    }
    CHECK(verify_witness(witness_from_local_embeddings(x5, claw, local)));

    auto bad = find_embedding(target, complete_graph(3), EmbedMode::Subgraph);
    REQUIRE(bad);
    CHECK_THROWS_AS(witness_from_local_embeddings(complete_graph(3), target, {*bad, *bad, *bad}),
                    PreconditionError);
  }

  TEST_CASE("witness text round trip") {
    auto r = si_oracle(path_graph(4), p1p3());
    REQUIRE(r.witness);
    auto text = serialize_witness(*r.witness);
    auto back = parse_witness(text);
    CHECK(serialize_witness(back) == text);
    CHECK(verify_witness(back));
    CHECK_THROWS_AS(parse_witness("sic-witness\nhost 2 1\n0 1\nmaps 0\nclaimed 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_witness("garbage"), ParseError);
  }
}
