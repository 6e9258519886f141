#include "cox/avoidance.hpp"

#include <algorithm>
#include <tuple>

namespace cox {

std::string to_string(WideKind k) {
  return k == WideKind::kTwoInfiniteFactors ? "TwoInfiniteFactors" : "AffineRank3Plus";
}

void check_size_cap(const CoxeterGraph& g, std::size_t cap) {
  if (g.size() > cap) {
    throw CapExceeded("graph has " + std::to_string(g.size()) + " vertices", cap);
  }
}

namespace {

struct ComponentInfo {
  VertexSet set;
  bool infinite;
  bool affine3;  // irreducible affine of rank >= 3
};

std::vector<ComponentInfo> component_info(const CoxeterGraph& g, VertexSet s) {
  std::vector<ComponentInfo> out;
  for (VertexSet c : irreducible_components(g, s)) {
    auto v = detail::classify_component(g, c);
    out.push_back({c, !v.finite(), v.affine() && v.rank >= 3});
  }
  return out;
}

bool less_join(const SpecialJoin& a, const SpecialJoin& b) {
  auto key = [](const SpecialJoin& j) {
    return std::make_tuple(j.blocked().size(), j.blocked().bits(), j.p.bits(), j.q.bits(),
                           j.k.bits());
  };
  if (a.blocked() != b.blocked()) return set_order_less(a.blocked(), b.blocked());
  return key(a) < key(b);
}

// Nonempty spherical subsets of `pool`, plus the empty set first.
std::vector<VertexSet> spherical_subsets_of(const CoxeterGraph& g, VertexSet pool) {
  std::vector<VertexSet> out{VertexSet{}};
  auto rec = [&](auto&& self, VertexSet current, VertexSet candidates) -> void {
    for (Vertex v : candidates) {
      VertexSet next = current;
      next.insert(v);
      if (!is_spherical(g, next)) continue;
      out.push_back(next);
      VertexSet later(candidates.bits() & ~((std::uint64_t{2} << v) - 1));
      self(self, next, later & g.neighbors(v));
    }
  };
  rec(rec, VertexSet{}, pool);
  return out;
}

std::pair<Vertex, Vertex> split_pair(const CoxeterGraph& g, VertexSet rest) {
  auto comps = g.connected_components(rest);
  return {comps[0].least(), (rest - comps[0]).least()};
}

}  // namespace

std::optional<WideDecomposition> wide_decomposition(const CoxeterGraph& g, VertexSet s) {
  auto comps = component_info(g, s);
  const ComponentInfo* first_infinite = nullptr;
  int infinite = 0;
  for (const auto& c : comps) {
    if (!c.infinite) continue;
    if (!first_infinite) first_infinite = &c;
    ++infinite;
  }
  if (infinite >= 2) {
    return WideDecomposition{first_infinite->set, s - first_infinite->set,
                             WideKind::kTwoInfiniteFactors};
  }
  for (const auto& c : comps) {
    if (c.affine3) return WideDecomposition{c.set, s - c.set, WideKind::kAffineRank3Plus};
  }
  return std::nullopt;
}

bool is_wide(const CoxeterGraph& g, VertexSet s) { return wide_decomposition(g, s).has_value(); }

std::vector<WideDecomposition> all_wide_decompositions(const CoxeterGraph& g, VertexSet s) {
  auto comps = component_info(g, s);
  std::vector<WideDecomposition> out;
  const std::size_t k = comps.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    VertexSet p;
    bool p_infinite = false;
    bool q_infinite = false;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) {
        p |= comps[i].set;
        p_infinite |= comps[i].infinite;
      } else {
        q_infinite |= comps[i].infinite;
      }
    }
    if (p_infinite && q_infinite) {
      out.push_back({p, s - p, WideKind::kTwoInfiniteFactors});
    } else if (std::popcount(mask) == 1 && comps[std::countr_zero(mask)].affine3) {
      out.push_back({p, s - p, WideKind::kAffineRank3Plus});
    }
  }
  return out;
}

std::vector<VertexSet> enumerate_wide_subgraphs(const CoxeterGraph& g, bool maximal_only,
                                                std::size_t cap) {
  check_size_cap(g, cap);
  std::vector<VertexSet> wide;
  const std::uint64_t limit = std::uint64_t{1} << g.size();
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    if (std::popcount(bits) >= 2 && is_wide(g, VertexSet(bits))) wide.emplace_back(bits);
  }
  if (maximal_only) {
    std::vector<VertexSet> top;
    for (VertexSet w : wide) {
      bool dominated = std::any_of(wide.begin(), wide.end(), [&](VertexSet o) {
        return o != w && w.subset_of(o);
      });
      if (!dominated) top.push_back(w);
    }
    wide = std::move(top);
  }
  std::sort(wide.begin(), wide.end(), set_order_less);
  return wide;
}

bool is_affine_free(const CoxeterGraph& g, std::size_t cap) {
  check_size_cap(g, cap);
  const std::uint64_t limit = std::uint64_t{1} << g.size();
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    if (std::popcount(bits) < 3) continue;
    VertexSet s(bits);
    if (irreducible_components(g, s).size() != 1) continue;
    auto v = detail::classify_component(g, s);
    if (v.affine()) return false;
  }
  return true;
}

std::vector<SpecialJoin> enumerate_special_joins(const CoxeterGraph& g, bool maximal_only,
                                                 std::size_t cap) {
  std::vector<SpecialJoin> joins;
  for (VertexSet u : enumerate_wide_subgraphs(g, false, cap)) {
    for (const auto& d : all_wide_decompositions(g, u)) {
      VertexSet pool = g.common_neighbors(d.p) - u;
      for (VertexSet k : spherical_subsets_of(g, pool)) joins.push_back({d.p, d.q, k});
    }
  }
  if (maximal_only) {
    std::vector<SpecialJoin> top;
    for (const auto& j : joins) {
      bool dominated = std::any_of(joins.begin(), joins.end(), [&](const SpecialJoin& o) {
        return o.blocked() != j.blocked() && j.blocked().subset_of(o.blocked());
      });
      if (!dominated) top.push_back(j);
    }
    joins = std::move(top);
  }
  std::sort(joins.begin(), joins.end(), less_join);
  return joins;
}

bool avoiding_path_exists(const CoxeterGraph& g, VertexSet blocked, Vertex s, Vertex t) {
  if (s == t || g.adjacent(s, t)) return true;
  const VertexSet interior = g.vertices() - blocked - VertexSet::single(s) - VertexSet::single(t);
  VertexSet reach = g.neighbors(s) & interior;
  VertexSet frontier = reach;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next = (next & interior) - reach;
    reach |= next;
    frontier = next;
  }
  return g.neighbors(t).intersects(reach);
}

AvoidanceReport is_wide_avoidant(const CoxeterGraph& g, std::size_t cap) {
  const auto wide = enumerate_wide_subgraphs(g, false, cap);
  const VertexSet all = g.vertices();
  // A wide subgraph whose complement falls apart gives the most telling witness.
  for (VertexSet d : wide) {
    VertexSet rest = all - d;
    if (rest.size() >= 2 && g.connected_components(rest).size() > 1) {
      auto [s, t] = split_pair(g, rest);
      return {false, AvoidanceWitness{d, s, t, std::nullopt}};
    }
  }
  for (VertexSet d : enumerate_wide_subgraphs(g, true, cap)) {
    for (Vertex s : all) {
      for (Vertex t : all) {
        if (t <= s) continue;
        if (!avoiding_path_exists(g, d, s, t)) {
          return {false, AvoidanceWitness{d, s, t, std::nullopt}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

AvoidanceReport is_wide_spherical_avoidant(const CoxeterGraph& g, std::size_t cap) {
  const auto joins = enumerate_special_joins(g, false, cap);
  const VertexSet all = g.vertices();
  for (const auto& j : joins) {
    VertexSet rest = all - j.blocked();
    if (rest.size() >= 2 && g.connected_components(rest).size() > 1) {
      auto [s, t] = split_pair(g, rest);
      return {false, AvoidanceWitness{j.blocked(), s, t, j}};
    }
  }
  // A join whose blocked set is larger and whose K is smaller imposes a
  // stronger condition on a larger set of pairs; only undominated joins matter.
  std::vector<const SpecialJoin*> needed;
  for (const auto& j : joins) {
    bool dominated = false;
    for (const auto& o : joins) {
      if (&o == &j) continue;
      bool stronger = j.blocked().subset_of(o.blocked()) && o.k.subset_of(j.k);
      bool same = o.blocked() == j.blocked() && o.k == j.k;
      if (stronger && (!same || &o < &j)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) needed.push_back(&j);
  }
  for (const SpecialJoin* j : needed) {
    VertexSet pairs = all - j->k;
    for (Vertex s : pairs) {
      for (Vertex t : pairs) {
        if (t <= s) continue;
        if (!avoiding_path_exists(g, j->blocked(), s, t)) {
          return {false, AvoidanceWitness{j->blocked(), s, t, *j}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

WideIndex::WideIndex(const CoxeterGraph& g, std::size_t cap)
    : all_(enumerate_wide_subgraphs(g, false, cap)) {
  for (VertexSet w : all_) {
    bool dominated = std::any_of(all_.begin(), all_.end(), [&](VertexSet o) {
      return o != w && w.subset_of(o);
    });
    if (!dominated) maximal_.push_back(w);
  }
}

bool WideIndex::contained(VertexSet labels) const {
  return maximal_containing(labels).has_value();
}

std::optional<VertexSet> WideIndex::smallest_containing(VertexSet labels) const {
  for (VertexSet w : all_) {
    if (labels.subset_of(w)) return w;
  }
  return std::nullopt;
}

std::optional<VertexSet> WideIndex::maximal_containing(VertexSet labels) const {
  for (VertexSet w : maximal_) {
    if (labels.subset_of(w)) return w;
  }
  return std::nullopt;
}

}  // namespace cox
