#include "checks.hpp"

#include <algorithm>

#include "oracles.hpp"

namespace cox::test {

bool crosses(const WordEngine& e, const Reflection& r, const Word& g) {
  return e.normalize(concat(r.element.word, g)).length() < e.normalize(g).length();
}

std::vector<std::string> multitail_problems(const Analysis& a, const MultiTailFilter& m,
                                            const Word& alpha, const Word& beta,
                                            std::size_t exhaustive_length) {
  const CoxeterGraph& g = a.graph();
  const WordEngine& e = a.engine();
  std::vector<std::string> out;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
  };
  const std::size_t d = m.sigma.size();
  if (m.gammas.size() != d + 1 || m.rays.size() != d + 1 || m.case_trace.size() != d) {
    out.push_back("shape: gammas, rays and case_trace do not match sigma");
    return out;
  }
  expect(element_key(g, m.gammas.front()) == element_key(g, slice(alpha, 0, m.level)),
         "first tail does not end at alpha(n)");
  expect(element_key(g, m.gammas.back()) == element_key(g, slice(beta, 0, m.level)),
         "last tail does not end at beta(n)");
  expect(element_key(g, concat(reversed(slice(alpha, 0, m.level)), slice(beta, 0, m.level))) ==
             element_key(g, m.sigma),
         "sigma does not join alpha(n) to beta(n)");
  expect(reduced_by_roots(g, m.sigma), "sigma not geodesic");
  for (std::size_t i = 0; i <= d; ++i) {
    const std::string at = " at tail " + std::to_string(i);
    expect(reduced_by_roots(g, m.gammas[i]), "tail not geodesic" + at);
    expect(m.gammas[i].size() <= m.level + std::min(i, d - i), "tail too long" + at);
    if (m.rays[i].empty()) {
      out.push_back("empty ray" + at);
      continue;
    }
    expect(reduced_by_roots(g, concat(m.gammas[i], m.rays[i])), "tail plus ray not geodesic" + at);
    if (i > 0) {
      expect(element_key(g, concat(m.gammas[i - 1], {m.sigma[i - 1]})) == element_key(g, m.gammas[i]),
             "consecutive tails not one sigma step apart" + at);
    }
  }
  for (const auto& step : m.case_trace) {
    const std::string at = " at step " + std::to_string(step.k);
    if (step.k < 1 || step.k > d) {
      out.push_back("step index out of range" + at);
      continue;
    }
    const bool prev = crosses(e, step.wall, m.gammas[step.k - 1]);
    const bool next = crosses(e, step.wall, m.gammas[step.k]);
    expect(prev != next, "wall crosses both or neither tail" + at);
    expect(step.crosses_previous == prev && step.crosses_next == next,
           "recorded crossing differs from recomputation" + at);
    expect((step.kind == StepCase::kPrepend) == prev, "case differs from the crossing" + at);
    if (step.kind == StepCase::kPrepend) {
      expect(m.rays[step.k] == concat({step.letter}, m.rays[step.k - 1]), "prepended ray mismatch" + at);
    }
  }
  expect(m.constituent_filters.size() == m.tails.size(), "one filter per tail");
  for (std::size_t i = 0; i < m.constituent_filters.size() && i < m.tails.size(); ++i) {
    const FilterReport r =
        check_filter(a, m.constituent_filters[i], {.exhaustive_length = exhaustive_length});
    for (const auto& v : r.violations) out.push_back("filter " + std::to_string(i) + ": " + v.code);
    expect(m.constituent_filters[i].prefix == m.tails[i], "filter prefix is not its tail");
  }
  return out;
}

bool brute_two_ended_racg(const CoxeterGraph& g) {
  // Two non-adjacent vertices joined to a clique holding everything else.
  const auto v = g.vertices().members();
  for (Vertex a : v) {
    for (Vertex b : v) {
      if (a >= b || g.adjacent(a, b)) continue;
      bool ok = true;
      for (Vertex x : v) {
        if (x == a || x == b) continue;
        for (Vertex y : v) ok = ok && (y == x || g.adjacent(x, y));
      }
      if (ok) return true;
    }
  }
  return false;
}

VerdictCase brute_racg_case(const CoxeterGraph& g) {
  if (gram_finite(g, g.vertices()) || brute_wide(g, g.vertices())) {
    return VerdictCase::kEmptyBoundaryFiniteOrWide;
  }
  if (brute_two_ended_racg(g) || brute_spherical_separator(g)) return VerdictCase::kDisconnectedMultiEnded;
  if (brute_wide_avoidant(g)) return VerdictCase::kConnectedLocallyConnected;
  return VerdictCase::kDisconnectedNotWideAvoidant;
}

}  // namespace cox::test
