#include <doctest.h>

#include <random>
#include <thread>

#include "../support/corpus.hpp"
#include "../support/oracles.hpp"
#include "cox/error.hpp"
#include "cox/word.hpp"

using namespace cox;
using namespace cox::test;

namespace {

const CoxeterGraph& a2() {
  static const CoxeterGraph g = parse_graph("v a b; e a b 3");
  return g;
}
const CoxeterGraph& b2() {
  static const CoxeterGraph g = parse_graph("v a b; e a b 4");
  return g;
}
const CoxeterGraph& free2() {
  static const CoxeterGraph g = parse_graph("v a b");
  return g;
}

std::vector<std::string> orbit_text(const WordEngine& e, const std::string& w) {
  std::vector<std::string> out;
  for (const Word& x : e.tits_orbit(e.parse(w))) out.push_back(e.format(x));
  return out;
}

}  // namespace

TEST_CASE("tits_orbit examples") {
  WordEngine e3(a2()), e4(b2()), einf(free2());
  CHECK(orbit_text(e3, "a b a") == std::vector<std::string>{"a b a", "b a b"});
  CHECK(orbit_text(einf, "a b") == std::vector<std::string>{"a b"});
  CHECK(orbit_text(e4, "a b a b") == std::vector<std::string>{"a b a b", "b a b a"});
  CHECK_THROWS_AS(e3.tits_orbit(e3.parse("a a")), PreconditionError);

  // Commuting letters give every shuffle.
  const CoxeterGraph tri = parse_graph("v a b c; e a b 2; e b c 2; e a c 2");
  WordEngine et(tri);
  CHECK(et.tits_orbit(et.parse("a b c")).size() == 6);
  CHECK_THROWS_AS(et.tits_orbit(et.parse("a b c"), 3), CapExceeded);
}

TEST_CASE("normalize examples") {
  WordEngine e3(a2());
  CHECK(e3.normalize(e3.parse("a a")).identity());
  CHECK(e3.format(e3.normalize(e3.parse("a b a b")).word) == "b a");
  CHECK(e3.format(e3.normalize(e3.parse("b a b")).word) == "a b a");
  CHECK(e3.format(e3.normalize(e3.parse("a b a")).word) == "a b a");
  CHECK(e3.normalize({}).identity());
}

TEST_CASE("ending_letters examples") {
  WordEngine e3(a2()), einf(free2());
  CHECK(e3.ending_letters(Word{}).empty());
  CHECK(einf.ending_letters(einf.parse("a b")) == VertexSet::single(1));
  CHECK(e3.ending_letters(e3.parse("a b a")) == VertexSet::first(2));
  CHECK_THROWS_AS(e3.ending_letters(e3.parse("a a")), PreconditionError);
}

TEST_CASE("normalize agrees with the group table of finite groups") {
  for (const char* name : {"A3", "B3", "H3", "I2(5)", "D4", "A4"}) {
    CAPTURE(name);
    const CoxeterGraph g = finite_type(name);
    const auto table = length_table(g, 10000);
    REQUIRE_FALSE(table.empty());
    WordEngine engine(g);
    std::map<std::vector<long long>, Word> canonical;
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 1500; ++trial) {
      const Word w = random_word(rng, g, rng() % 14);
      const GroupElement x = engine.normalize(w);
      const auto key = element_key(g, w);
      CHECK(element_key(g, x.word) == key);
      CHECK(x.length() == table.at(key));
      auto [it, fresh] = canonical.emplace(key, x.word);
      if (!fresh) CHECK(it->second == x.word);
      // The canonical word is the least reduced expression.
      const auto orbit = engine.tits_orbit(x.word);
      CHECK(orbit.front() == x.word);
    }
  }
}

TEST_CASE("word engine invariants on the corpus") {
  std::mt19937_64 rng(17);
  for (const auto& [name, g] : corpus()) {
    CAPTURE(name);
    WordEngine engine(g);
    for (int trial = 0; trial < 150; ++trial) {
      const Word w = random_word(rng, g, rng() % 13);
      const GroupElement x = engine.normalize(w);
      CHECK(engine.normalize(x.word) == x);
      CHECK(engine.normalize(concat(w, reversed(w))).identity());
      const bool geodesic = engine.is_geodesic(w);
      CHECK(geodesic == (x.length() == w.size()));
      if (!geodesic) continue;
      const auto refl = engine.edge_reflections(w);
      bool distinct = true;
      for (std::size_t i = 0; i < refl.size(); ++i) {
        for (std::size_t j = i + 1; j < refl.size(); ++j) distinct = distinct && !(refl[i] == refl[j]);
      }
      CHECK(distinct);
      const VertexSet k = engine.ending_letters(w);
      CHECK(gram_finite(g, k));
      for (Vertex t : g.vertices()) {
        CHECK(k.contains(t) == !engine.is_geodesic(concat(w, {t})));
      }
    }
  }
}

TEST_CASE("a repeated dual reflection means the word is not geodesic") {
  std::mt19937_64 rng(23);
  for (const auto& [name, g] : corpus()) {
    CAPTURE(name);
    WordEngine engine(g);
    for (int trial = 0; trial < 100; ++trial) {
      const Word w = random_word(rng, g, 2 + rng() % 8);
      // Reflections computed without a geodesy check.
      std::vector<GroupElement> refl;
      for (std::size_t i = 0; i < w.size(); ++i) {
        Word r = slice(w, 0, i + 1);
        const Word back = reversed(slice(w, 0, i));
        r.insert(r.end(), back.begin(), back.end());
        refl.push_back(engine.normalize(r));
      }
      bool repeated = false;
      for (std::size_t i = 0; i < refl.size(); ++i) {
        for (std::size_t j = i + 1; j < refl.size(); ++j) repeated = repeated || refl[i] == refl[j];
      }
      CHECK(engine.is_geodesic(w) == !repeated);
    }
  }
}

TEST_CASE("forbidden last letters") {
  std::mt19937_64 rng(29);
  for (const auto& [name, g] : corpus()) {
    CAPTURE(name);
    WordEngine engine(g);
    for (int trial = 0; trial < 100; ++trial) {
      const Word w = random_geodesic(rng, engine, rng() % 10);
      const VertexSet k = engine.ending_letters(w);
      for (std::size_t i = 0; i < w.size(); ++i) {
        const Vertex s = w[i];
        for (Vertex t : g.vertices()) {
          if (t == s || g.adjacent(s, t)) continue;
          bool later = false;
          for (std::size_t j = i + 1; j < w.size(); ++j) later = later || w[j] == t;
          bool last_s = true;
          for (std::size_t j = i + 1; j < w.size(); ++j) last_s = last_s && w[j] != s;
          if (last_s && !later) CHECK_FALSE(k.contains(t));
        }
      }
    }
  }
}

TEST_CASE("reflection_of_edge") {
  WordEngine e(a2());
  const Word ab = e.parse("a b");
  CHECK(e.format(e.reflection_of_edge(ab, 1).element.word) == "a");
  CHECK(e.reflection_of_edge(ab, 2).element == e.normalize(e.parse("a b a")));
  CHECK(e.reflection_of_edge(ab, 2).type_generator == 1);
  CHECK_THROWS_AS(e.reflection_of_edge(e.parse("a a"), 1), PreconditionError);
  CHECK_THROWS_AS(e.reflection_of_edge(ab, 3), PreconditionError);
  CHECK_THROWS_AS(e.reflection_of_edge(ab, 0), PreconditionError);
}

TEST_CASE("reflections are involutions") {
  std::mt19937_64 rng(31);
  for (const auto& [name, g] : corpus()) {
    WordEngine engine(g);
    const Word w = random_geodesic(rng, engine, 8);
    for (const auto& r : engine.edge_reflections(w)) {
      CHECK(engine.normalize(concat(r.element.word, r.element.word)).identity());
      CHECK(r.element.length() % 2 == 1);
    }
  }
}

TEST_CASE("wide_tail examples") {
  const CoxeterGraph sq = c4();
  WordEngine se(sq);
  const WideTail t = wide_tail(sq, se.parse("s1 s3 s1"));
  CHECK(t.suffix.size() == 3);
  REQUIRE(t.delta.has_value());
  CHECK(*t.delta == sq.vertices());

  const CoxeterGraph pent = c5();
  WordEngine pe(pent);
  const WideTail none = wide_tail(pent, pe.parse("v1 v3 v5 v2"));
  CHECK(none.suffix.empty());
  CHECK_FALSE(none.delta.has_value());

  const CoxeterGraph apex = c4_apex3();
  WordEngine ae(apex);
  const WideTail part = wide_tail(apex, ae.parse("a s1 s3"));
  CHECK(ae.format(part.suffix) == "s1 s3");
  REQUIRE(part.delta.has_value());
  CHECK(*part.delta == parse_vertex_set(apex, "s1 s2 s3 s4"));
  CHECK_THROWS_AS(wide_tail(apex, ae.parse("a a")), PreconditionError);
}

TEST_CASE("extend_geodesic examples") {
  const CoxeterGraph pent = c5();
  WordEngine e(pent);
  const Extension x = extend_geodesic(pent, e.parse("v1"), 6);
  CHECK(x.word.size() == 6);
  CHECK(e.normalize(x.word).length() == 6);
  CHECK(x.appended_from == 1);
  CHECK(x.word.front() == pent.index_of("v1"));

  CHECK_THROWS_AS(extend_geodesic(c4(), WordEngine(c4()).parse("s1"), 4), PreconditionError);
  const CoxeterGraph sq = c4();
  WordEngine se(sq);
  const WideIndex wide(sq);
  CHECK_THROWS_AS(extend_geodesic(se, wide, compute_constants(sq), se.parse("s1"), 4),
                  PreconditionError);
  CHECK_THROWS_AS(extend_geodesic(parse_graph("v a"), Word{0}, 3), PreconditionError);
}

TEST_CASE("extensions avoid long wide windows") {
  for (const char* name : {"Q3", "C5", "C5_3", "Prism"}) {
    CAPTURE(name);
    const CoxeterGraph& g = corpus().at(name);
    if (!is_wide_spherical_avoidant(g).holds) continue;
    WordEngine e(g);
    const WideIndex wide(g);
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
      const Word start = random_geodesic(rng, e, 1 + rng() % 4);
      const Extension x = extend_geodesic(g, start, 20);
      CHECK(e.is_geodesic(x.word));
      CHECK(x.word.size() == 20);
      for (std::size_t i = x.appended_from; i < x.word.size(); ++i) {
        for (std::size_t j = i + x.window + 1; j <= x.word.size(); ++j) {
          CHECK_FALSE(wide.contained(support(slice(x.word, i, j))));
        }
      }
    }
  }
}

TEST_CASE("the orbit memo behaves as if absent") {
  const CoxeterGraph g = corpus().at("C5_3");
  std::mt19937_64 rng(43);
  std::vector<Word> words;
  for (int i = 0; i < 200; ++i) words.push_back(random_word(rng, g, 12));

  WordEngine warm(g);
  std::vector<GroupElement> first;
  for (const auto& w : words) first.push_back(warm.normalize(w));
  CHECK(warm.memo_size() > 0);

  WordEngine cold(g);
  for (std::size_t i = 0; i < words.size(); ++i) {
    cold.clear_memo();
    CHECK(cold.normalize(words[i]) == first[i]);
  }

  WordEngine shared(g);
  std::vector<std::vector<GroupElement>> results(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (const auto& w : words) results[t].push_back(shared.normalize(w));
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& r : results) CHECK(r == first);
}

TEST_CASE("parse and format") {
  WordEngine e(c5());
  CHECK(e.format(e.parse("  v1 v2   v3 ")) == "v1 v2 v3");
  CHECK(e.parse("").empty());
  CHECK(e.format({}).empty());
  CHECK_THROWS_AS(e.parse("v9"), ParseError);
}
