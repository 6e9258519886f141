#include <doctest.h>

#include <algorithm>
#include <random>

#include "../support/corpus.hpp"
#include "../support/oracles.hpp"
#include "cox/avoidance.hpp"
#include "cox/error.hpp"

using namespace cox;
using namespace cox::test;

TEST_CASE("wide_decomposition examples") {
  const CoxeterGraph sq = c4();
  const auto d = wide_decomposition(sq, sq.vertices());
  REQUIRE(d.has_value());
  CHECK(d->p == parse_vertex_set(sq, "s1 s3"));
  CHECK(d->q == parse_vertex_set(sq, "s2 s4"));
  CHECK(d->kind == WideKind::kTwoInfiniteFactors);

  const CoxeterGraph t = triangle333();
  const auto a = wide_decomposition(t, t.vertices());
  REQUIRE(a.has_value());
  CHECK(a->p == t.vertices());
  CHECK(a->q.empty());
  CHECK(a->kind == WideKind::kAffineRank3Plus);

  CHECK_FALSE(wide_decomposition(p3(), p3().vertices()).has_value());
  CHECK_FALSE(brute_wide(p3(), p3().vertices()));
}

TEST_CASE("wideness agrees with partition brute force on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const CoxeterGraph g = random_graph(rng, n, {0, 2, 2, 3, 4, 5});
    CAPTURE(serialize(g));
    const auto d = wide_decomposition(g, g.vertices());
    CHECK(d.has_value() == brute_wide(g, g.vertices()));
    if (d) {
      CHECK_FALSE(d->p.intersects(d->q));
      CHECK((d->p | d->q) == g.vertices());
      for (Vertex a : d->p) {
        for (Vertex b : d->q) CHECK(g.label(a, b) == 2);
      }
    }
  }
}

TEST_CASE("enumerate_wide_subgraphs examples") {
  CHECK(enumerate_wide_subgraphs(c5(), false).empty());
  const CoxeterGraph sq = c4();
  const auto all = enumerate_wide_subgraphs(sq, false);
  CHECK(std::find(all.begin(), all.end(), sq.vertices()) != all.end());
  CHECK(enumerate_wide_subgraphs(sq, true) == std::vector<VertexSet>{sq.vertices()});
  CHECK(enumerate_wide_subgraphs(parse_graph(""), false).empty());
}

TEST_CASE("wide subgraphs agree with brute force on the corpus") {
  for (const auto& [name, g] : corpus()) {
    CAPTURE(name);
    std::vector<VertexSet> expected;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << g.size()); ++bits) {
      if (brute_wide(g, VertexSet(bits))) expected.push_back(VertexSet(bits));
    }
    auto got = enumerate_wide_subgraphs(g, false);
    std::sort(got.begin(), got.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    CHECK(got == expected);
    for (VertexSet m : enumerate_wide_subgraphs(g, true)) {
      for (VertexSet o : expected) CHECK_FALSE((m != o && m.subset_of(o)));
    }
  }
}

TEST_CASE("is_affine_free examples") {
  CHECK(is_affine_free(c5()));
  CHECK(is_affine_free(c4()));
  CHECK_FALSE(is_affine_free(triangle333()));
  CHECK_FALSE(is_affine_free(parse_graph("v a b c d; e a b 3; e b c 3; e c a 3; e c d 2")));
  for (const auto& [name, g] : corpus()) {
    CAPTURE(name);
    CHECK(is_affine_free(g) == brute_affine_free(g));
  }
}

TEST_CASE("enumerate_special_joins examples") {
  const CoxeterGraph sq = c4();
  const auto joins = enumerate_special_joins(sq, false);
  const SpecialJoin expected{parse_vertex_set(sq, "s1 s3"), parse_vertex_set(sq, "s2 s4"), {}};
  CHECK(std::find(joins.begin(), joins.end(), expected) != joins.end());
  CHECK(enumerate_special_joins(c5(), false).empty());

  // Square plus an apex on s1 and s3: the apex can serve as K over P = {s1, s3}.
  const CoxeterGraph apex = c4_apex2();
  const auto aj = enumerate_special_joins(apex, false);
  const SpecialJoin with_k{parse_vertex_set(apex, "s1 s3"), parse_vertex_set(apex, "s2 s4"),
                           parse_vertex_set(apex, "a")};
  CHECK(std::find(aj.begin(), aj.end(), with_k) != aj.end());
  for (const auto& j : aj) {
    CHECK_FALSE(j.p.intersects(j.q));
    CHECK_FALSE(j.k.intersects(j.p | j.q));
    CHECK(is_wide(apex, j.p | j.q));
    CHECK(is_spherical(apex, j.k));
    for (Vertex x : j.k) CHECK(j.p.subset_of(apex.neighbors(x)));
  }
  const auto top = enumerate_special_joins(apex, true);
  for (const auto& j : top) {
    for (const auto& o : aj) CHECK_FALSE((o.blocked() != j.blocked() && j.blocked().subset_of(o.blocked())));
  }
}

TEST_CASE("is_wide_avoidant examples") {
  CHECK(is_wide_avoidant(c5()).holds);
  const CoxeterGraph sq = c4();
  const auto r = is_wide_avoidant(sq);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->blocking == sq.vertices());
  CHECK(r.witness->s == sq.index_of("s1"));
  CHECK(r.witness->t == sq.index_of("s3"));
  CHECK(is_wide_avoidant(parse_graph("v a")).holds);

  const CoxeterGraph g = g6();
  const auto w = is_wide_avoidant(g);
  CHECK_FALSE(w.holds);
  REQUIRE(w.witness.has_value());
  CHECK(w.witness->s == g.index_of("a"));
  CHECK(w.witness->t == g.index_of("b"));
  CHECK(w.witness->blocking == parse_vertex_set(g, "s1 s2 s3 s4"));
}

TEST_CASE("is_wide_spherical_avoidant examples") {
  CHECK(is_wide_spherical_avoidant(c5()).holds);
  const auto sq = is_wide_spherical_avoidant(c4());
  CHECK_FALSE(sq.holds);
  REQUIRE(sq.witness.has_value());
  CHECK(sq.witness->s == 0);
  CHECK(sq.witness->t == 2);
  CHECK(is_wide_spherical_avoidant(parse_graph("v a")).holds);
}

TEST_CASE("pruned deciders match the full quantifier on the corpus and random graphs") {
  std::vector<CoxeterGraph> graphs;
  for (const auto& [name, g] : corpus()) graphs.push_back(g);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 600; ++trial) {
    graphs.push_back(random_graph(rng, 4 + static_cast<int>(rng() % 3), {0, 2, 2, 2, 3}));
  }
  for (const auto& g : graphs) {
    CAPTURE(serialize(g));
    const auto wa = is_wide_avoidant(g);
    const auto wsa = is_wide_spherical_avoidant(g);
    CHECK(wa.holds == brute_wide_avoidant(g));
    CHECK(wsa.holds == brute_wide_spherical_avoidant(g));
    if (wsa.holds) CHECK(wa.holds);
    for (const auto* r : {&wa, &wsa}) {
      if (r->holds) continue;
      REQUIRE(r->witness.has_value());
      CHECK_FALSE(brute_avoiding_path(g, r->witness->blocking, r->witness->s, r->witness->t));
      CHECK(is_wide(g, r->witness->blocking - (r->witness->join ? r->witness->join->k : VertexSet{})));
    }
  }
}

TEST_CASE("avoiding paths") {
  const CoxeterGraph g = c5();
  const VertexSet all = g.vertices();
  CHECK(avoiding_path_exists(g, all, 0, 1));  // a direct edge needs no interior
  CHECK_FALSE(avoiding_path_exists(g, all, 0, 2));
  CHECK(avoiding_path_exists(g, parse_vertex_set(g, "v2"), 0, 2));
  CHECK(avoiding_path_exists(g, {}, 3, 3));
}

TEST_CASE("the size cap") {
  std::string text = "v";
  for (int i = 0; i < 21; ++i) text += " x" + std::to_string(i);
  const CoxeterGraph big = parse_graph(text);
  CHECK_THROWS_AS(enumerate_wide_subgraphs(big, false), CapExceeded);
  CHECK_THROWS_AS(is_wide_avoidant(big), CapExceeded);
  CHECK_NOTHROW(check_size_cap(big, 21));
}
