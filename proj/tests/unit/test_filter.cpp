#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "../support/corpus.hpp"
#include "../support/oracles.hpp"
#include "cox/error.hpp"
#include "cox/filter.hpp"

using namespace cox;
using namespace cox::test;

namespace {

bool has_code(const FilterReport& r, const std::string& code) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

std::string codes(const FilterReport& r) {
  std::string out;
  for (const auto& v : r.violations) out += v.code + ": " + v.detail + "\n";
  return out;
}

// Ray pair from the basepoint: two short random geodesics extended to `length`.
std::pair<Word, Word> rays(const WordEngine& e, std::mt19937_64& rng, std::size_t length) {
  auto ray = [&] { return extend_geodesic(e.graph(), random_geodesic(rng, e, 1 + rng() % 3), length).word; };
  Word a = ray();
  return {std::move(a), ray()};
}

// Structural facts checked against the dual-representation oracle.
void check_against_oracles(const CoxeterGraph& g, const FilterDiagram& f) {
  for (const auto& v : f.vertices) {
    const Word spelled = concat(f.prefix, v.tree_path);
    CHECK(element_key(g, spelled) == element_key(g, v.element.word));
    CHECK(reduced_by_roots(g, spelled));
  }
  for (const auto& e : f.edges) {
    const Word from = f.vertices[e.source].element.word;
    CHECK(element_key(g, concat(from, {e.label})) == element_key(g, f.vertices[e.target].element.word));
    CHECK(f.vertices[e.target].element.length() == f.vertices[e.source].element.length() + 1);
  }
  for (const auto& c : f.cells) {
    REQUIRE(c.left_path.size() == static_cast<std::size_t>(c.m));
    REQUIRE(c.right_path.size() == static_cast<std::size_t>(c.m));
    Word left, right;
    for (int id : c.left_path) left.push_back(f.edges[id].label);
    for (int id : c.right_path) right.push_back(f.edges[id].label);
    CHECK(element_key(g, left) == element_key(g, right));
    CHECK(left.front() != right.front());
  }
}

const int kSamples = std::getenv("COX_STRESS") ? 60 : 8;

}  // namespace

TEST_CASE("depth 0 is the pair of boundary rays") {
  const CoxeterGraph g = c5();
  const Analysis a(g);
  const Word alpha = a.engine().parse("v1 v3 v5");
  const Word beta = a.engine().parse("v2 v4 v1");
  const FilterDiagram f = build_filter(a, alpha, beta, 0);
  CHECK(f.cells.empty());
  CHECK(f.fans.empty());
  CHECK(f.edges.size() == 6);
  CHECK(f.vertices.size() == 7);
  for (const auto& e : f.edges) CHECK(e.boundary != Boundary::kNone);
  CHECK(check_filter(a, f).ok());
}

TEST_CASE("build_filter preconditions") {
  const Analysis sq(c4());
  CHECK_THROWS_AS(build_filter(sq, {0}, {1}, 1), PreconditionError);
  const CoxeterGraph g = c5();
  const Analysis a(g);
  CHECK_THROWS_AS(build_filter(a, a.engine().parse("v1 v2 v1 v2"), a.engine().parse("v3"), 1),
                  PreconditionError);
  CHECK_THROWS_AS(build_filter(a, {0}, {1}, -1), PreconditionError);
}

TEST_CASE("pentagon filters have square cells and no violations") {
  const CoxeterGraph g = c5();
  const Analysis a(g);
  const Word alpha = a.engine().parse("v1 v2 v3 v1 v3 v1 v3 v1");
  const Word beta = a.engine().parse("v5 v1 v2 v3 v1 v3 v1 v3");
  for (int depth = 1; depth <= 5; ++depth) {
    CAPTURE(depth);
    const FilterDiagram f = build_filter(a, alpha, beta, depth);
    for (const auto& c : f.cells) CHECK(c.m == 2);
    const FilterReport r = check_filter(a, f);
    CAPTURE(codes(r));
    CHECK(r.ok());
    CHECK(r.rooted_paths_checked > 0);
    check_against_oracles(g, f);
  }
}

TEST_CASE("filters on sampled rays") {
  std::mt19937_64 rng(71);
  for (const std::string name : {"C5", "Q3", "C5_3", "Prism"}) {
    CAPTURE(name);
    const CoxeterGraph& g = corpus().at(name);
    const Analysis a(g);
    for (int trial = 0; trial < kSamples; ++trial) {
      const auto [alpha, beta] = rays(a.engine(), rng, 7);
      const Word prefix = trial % 2 ? random_geodesic(rng, a.engine(), 3) : Word{};
      if (!a.engine().is_geodesic(concat(prefix, alpha)) ||
          !a.engine().is_geodesic(concat(prefix, beta))) {
        continue;
      }
      CAPTURE(a.engine().format(alpha));
      CAPTURE(a.engine().format(beta));
      CAPTURE(a.engine().format(prefix));
      const FilterDiagram f = build_filter(a, alpha, beta, 3, prefix);
      const FilterReport r = check_filter(a, f, {.exhaustive_length = 10, .sampled_paths = 100});
      CAPTURE(codes(r));
      CHECK(r.ok());
      check_against_oracles(g, f);
    }
  }
}

TEST_CASE("check_filter negative controls") {
  const CoxeterGraph g = c5();
  const Analysis a(g);
  const Word alpha = a.engine().parse("v1 v2 v3 v1 v3 v1 v3 v1");
  const Word beta = a.engine().parse("v5 v1 v2 v3 v1 v3 v1 v3");
  const FilterDiagram f = build_filter(a, alpha, beta, 3);
  REQUIRE(check_filter(a, f).ok());

  FilterDiagram tampered = f;
  auto top_left = std::find_if(tampered.edges.begin(), tampered.edges.end(),
                               [](const FilterEdge& e) { return e.top_left; });
  REQUIRE(top_left != tampered.edges.end());
  CHECK_FALSE(top_left->in_tree);
  top_left->in_tree = true;
  CHECK(has_code(check_filter(a, tampered), "tree"));

  CHECK(check_filter(a, f).product_region_bound == 344);

  // The cube's faces are wide; a tiny product-region bound must be exceeded.
  const CoxeterGraph q = cube();
  const Analysis qa(q);
  const FilterDiagram qf = build_filter(qa, extend_geodesic(q, {0}, 6).word,
                                        extend_geodesic(q, {1}, 6).word, 4);
  REQUIRE(check_filter(qa, qf).ok());
  const FilterReport tight = check_filter(qa, qf, {.product_region_bound = 1});
  CHECK(tight.product_region_bound == 1);
  CHECK(has_code(tight, "product-region"));
}
