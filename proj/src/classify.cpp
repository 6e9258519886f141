#include "cox/classify.hpp"

#include <algorithm>

namespace cox {

std::string to_string(VerdictCase c) {
  switch (c) {
    case VerdictCase::kEmptyBoundaryFiniteOrWide: return "EmptyBoundary_FiniteOrWide";
    case VerdictCase::kDisconnectedMultiEnded: return "Disconnected_MultiEnded";
    case VerdictCase::kConnectedLocallyConnected: return "Connected_LocallyConnected";
    case VerdictCase::kDisconnectedNotWideAvoidant: return "Disconnected_NotWideAvoidant";
    case VerdictCase::kTheoremAppliesA: return "TheoremApplies_A";
    case VerdictCase::kTheoremAppliesC: return "TheoremApplies_C";
    case VerdictCase::kUnknownConjectureOpen: return "Unknown_ConjectureOpen";
  }
  return "?";
}

Splitting splitting_from_witness(const CoxeterGraph& g, const AvoidanceWitness& w) {
  const VertexSet all = g.vertices();
  const VertexSet pi = w.blocking;
  const VertexSet rest = all - pi;
  auto comps = g.connected_components(rest);
  if (comps.size() > 1) return {comps[0] | pi, pi, all - comps[0]};
  auto star = [&](Vertex v) { return g.neighbors(v) | VertexSet::single(v); };
  const Vertex s = star(w.s).subset_of(pi) ? w.s : w.t;
  return {star(s), g.neighbors(s), all - VertexSet::single(s)};
}

std::vector<std::string> check_splitting(const CoxeterGraph& g, const Splitting& s,
                                         std::size_t cap) {
  std::vector<std::string> problems;
  const VertexSet all = g.vertices();
  if ((s.gamma1 | s.gamma2) != all) problems.push_back("the two pieces do not cover the graph");
  if ((s.gamma1 & s.gamma2) != s.delta) problems.push_back("delta is not the intersection");
  if (s.gamma1 == all || s.gamma2 == all) problems.push_back("the splitting is trivial");
  const VertexSet only1 = s.gamma1 - s.delta;
  for (Vertex v : s.gamma2 - s.delta) {
    if (g.neighbors(v).intersects(only1)) {
      problems.push_back("an edge joins the two sides outside delta at " + g.name(v));
      break;
    }
  }
  if (is_spherical(g, s.delta)) problems.push_back("delta generates a finite group");
  auto wide = enumerate_wide_subgraphs(g, true, cap);
  if (std::none_of(wide.begin(), wide.end(), [&](VertexSet w) { return s.delta.subset_of(w); })) {
    problems.push_back("delta lies in no wide subgraph");
  }
  return problems;
}

ClassificationVerdict classify(const CoxeterGraph& g, std::size_t cap) {
  check_size_cap(g, cap);
  ClassificationVerdict v;
  v.right_angled = g.right_angled();
  v.constants = compute_constants(g);
  const VertexSet all = g.vertices();
  v.finite = is_spherical(g, all);
  v.ends = ends_verdict(g);
  v.hypotheses.one_ended = v.ends.kind == EndsKind::kOneEnded;
  if (v.finite) {
    v.kind = VerdictCase::kEmptyBoundaryFiniteOrWide;
    return v;
  }
  v.wide = wide_decomposition(g, all);
  if (v.wide) {
    v.kind = VerdictCase::kEmptyBoundaryFiniteOrWide;
    return v;
  }

  const AvoidanceReport wa = is_wide_avoidant(g, cap);
  v.hypotheses.wide_avoidant = wa.holds;

  if (v.right_angled) {
    v.hypotheses.affine_free = true;
    if (v.ends.kind == EndsKind::kMultiEnded || v.ends.kind == EndsKind::kTwoEnded) {
      v.kind = VerdictCase::kDisconnectedMultiEnded;
      return v;
    }
    v.hypotheses.wide_spherical_avoidant = is_wide_spherical_avoidant(g, cap).holds;
    if (wa.holds) {
      v.kind = VerdictCase::kConnectedLocallyConnected;
      return v;
    }
    v.kind = VerdictCase::kDisconnectedNotWideAvoidant;
    v.avoidance = wa.witness;
    v.splitting = splitting_from_witness(g, *wa.witness);
    return v;
  }

  if (!wa.holds) {
    v.kind = VerdictCase::kTheoremAppliesA;
    v.avoidance = wa.witness;
    if (v.ends.kind == EndsKind::kOneEnded) v.splitting = splitting_from_witness(g, *wa.witness);
    return v;
  }
  v.hypotheses.affine_free = is_affine_free(g, cap);
  const auto wsa = is_wide_spherical_avoidant(g, cap);
  v.hypotheses.wide_spherical_avoidant = wsa.holds;
  if (*v.hypotheses.affine_free && *v.hypotheses.one_ended && wsa.holds) {
    v.kind = VerdictCase::kTheoremAppliesC;
  } else {
    v.kind = VerdictCase::kUnknownConjectureOpen;
    if (!wsa.holds) v.avoidance = wsa.witness;
  }
  return v;
}

std::vector<std::string> check_verdict(const CoxeterGraph& g, const ClassificationVerdict& v,
                                       std::size_t cap) {
  std::vector<std::string> problems;
  const VertexSet all = g.vertices();
  if (v.wide) {
    const auto& d = *v.wide;
    if ((d.p | d.q) != all || d.p.intersects(d.q)) problems.push_back("wide witness is no partition");
    for (Vertex a : d.p) {
      if (!(d.q.subset_of(g.commuting(a)))) problems.push_back("wide witness has a non-commuting cross pair");
    }
  }
  if (v.ends.kind == EndsKind::kMultiEnded) {
    const VertexSet k = v.ends.witness.value_or(VertexSet{});
    if (!is_spherical(g, k)) problems.push_back("separator is not spherical");
    if (g.connected_components(all - k).size() < 2) problems.push_back("separator does not separate");
  }
  if (v.avoidance && !v.hypotheses.wide_avoidant.value_or(true)) {
    const auto& w = *v.avoidance;
    if (!is_wide(g, w.blocking)) problems.push_back("blocking set is not wide");
    if (avoiding_path_exists(g, w.blocking, w.s, w.t)) problems.push_back("witness pair is joined by an avoiding path");
  }
  if (v.splitting) {
    for (auto& p : check_splitting(g, *v.splitting, cap)) problems.push_back(p);
  }
  switch (v.kind) {
    case VerdictCase::kConnectedLocallyConnected:
    case VerdictCase::kTheoremAppliesC:
      if (!v.hypotheses.affine_free.value_or(false) || !v.hypotheses.one_ended.value_or(false) ||
          !v.hypotheses.wide_spherical_avoidant.value_or(false)) {
        problems.push_back("connectivity verdict without all three hypotheses verified");
      }
      break;
    case VerdictCase::kDisconnectedNotWideAvoidant:
      if (!v.splitting) problems.push_back("missing splitting witness");
      break;
    default:
      break;
  }
  return problems;
}

}  // namespace cox
