#include "cox/classification.hpp"

#include <algorithm>
#include <array>

namespace cox {

long long GroupConstants::product_region_bound() const {
  const long long k = static_cast<long long>(m) + v + 1;
  return 2 * k * (static_cast<long long>(r) * (k + 1) + r) + 3 * k;
}

std::string to_string(IrreducibleKind k) {
  switch (k) {
    case IrreducibleKind::kFinite: return "FiniteType";
    case IrreducibleKind::kAffine: return "AffineType";
    case IrreducibleKind::kInfiniteDihedral: return "InfiniteDihedral";
    case IrreducibleKind::kOtherInfinite: return "OtherInfinite";
  }
  return "?";
}

std::string to_string(EndsKind k) {
  switch (k) {
    case EndsKind::kFiniteGroup: return "FiniteGroup";
    case EndsKind::kTwoEnded: return "TwoEnded";
    case EndsKind::kOneEnded: return "OneEnded";
    case EndsKind::kMultiEnded: return "MultiEnded";
  }
  return "?";
}

namespace {

IrreducibleVerdict finite(std::string name, int rank, int longest) {
  return {IrreducibleKind::kFinite, std::move(name), rank, longest};
}

IrreducibleVerdict affine(const std::string& family, int rank) {
  // Affine names carry the rank of the associated finite root system.
  return {IrreducibleKind::kAffine, family + "~" + std::to_string(rank - 1), rank, std::nullopt};
}

IrreducibleVerdict other(int rank) { return {IrreducibleKind::kOtherInfinite, "", rank, std::nullopt}; }

// The Coxeter diagram on s: an edge wherever the generators fail to commute.
struct Diagram {
  const CoxeterGraph& g;
  VertexSet s;

  VertexSet links(Vertex v) const { return (s - g.commuting(v)) - VertexSet::single(v); }
  int degree(Vertex v) const { return links(v).size(); }

  // Walk from `from` through `start` until a leaf; labels in walking order.
  std::vector<int> walk(Vertex from, Vertex start) const {
    std::vector<int> labels{g.label(from, start)};
    Vertex prev = from;
    Vertex cur = start;
    while (true) {
      VertexSet next = links(cur) - VertexSet::single(prev);
      if (next.empty()) break;
      prev = cur;
      cur = next.least();
      labels.push_back(g.label(prev, cur));
    }
    return labels;
  }
};

bool all_equal(const std::vector<int>& xs, int value) {
  return std::all_of(xs.begin(), xs.end(), [&](int x) { return x == value; });
}

bool matches_either_way(const std::vector<int>& seq, const std::vector<int>& pattern) {
  return seq == pattern || std::equal(seq.rbegin(), seq.rend(), pattern.begin(), pattern.end());
}

IrreducibleVerdict classify_path(const std::vector<int>& seq, int n) {
  if (all_equal(seq, 3)) return finite("A" + std::to_string(n), n, n * (n + 1) / 2);

  std::vector<int> b(seq.size(), 3);
  b.front() = 4;
  if (matches_either_way(seq, b)) return finite("B" + std::to_string(n), n, n * n);

  if (seq == std::vector<int>{3, 4, 3}) return finite("F4", 4, 24);
  if (matches_either_way(seq, {5, 3})) return finite("H3", 3, 15);
  if (matches_either_way(seq, {5, 3, 3})) return finite("H4", 4, 60);

  std::vector<int> c(seq.size(), 3);
  c.front() = 4;
  c.back() = 4;
  if (seq == c) return affine("C", n);
  if (matches_either_way(seq, {3, 3, 4, 3})) return affine("F", n);
  if (matches_either_way(seq, {6, 3})) return affine("G", n);
  return other(n);
}

IrreducibleVerdict classify_one_branch(const Diagram& d, Vertex branch, int n) {
  struct Leg {
    std::vector<int> labels;
    bool operator<(const Leg& o) const { return labels.size() < o.labels.size(); }
  };
  std::vector<Leg> legs;
  for (Vertex u : d.links(branch)) legs.push_back({d.walk(branch, u)});
  std::sort(legs.begin(), legs.end());
  std::array<std::size_t, 3> len{legs[0].labels.size(), legs[1].labels.size(),
                                 legs[2].labels.size()};

  int fours = 0;
  bool others = false;
  for (const auto& leg : legs) {
    for (int m : leg.labels) {
      if (m == 4) ++fours;
      else if (m != 3) others = true;
    }
  }
  if (others) return other(n);

  if (fours == 0) {
    if (len[0] == 1 && len[1] == 1) return finite("D" + std::to_string(n), n, n * (n - 1));
    if (len == std::array<std::size_t, 3>{1, 2, 2}) return finite("E6", 6, 36);
    if (len == std::array<std::size_t, 3>{1, 2, 3}) return finite("E7", 7, 63);
    if (len == std::array<std::size_t, 3>{1, 2, 4}) return finite("E8", 8, 120);
    if (len == std::array<std::size_t, 3>{2, 2, 2}) return affine("E", n);
    if (len == std::array<std::size_t, 3>{1, 3, 3}) return affine("E", n);
    if (len == std::array<std::size_t, 3>{1, 2, 5}) return affine("E", n);
    return other(n);
  }
  // Affine B: two short legs and a 4 on the outermost edge of the third.
  if (fours == 1 && len[0] == 1 && len[1] == 1) {
    for (const auto& leg : legs) {
      if (leg.labels.back() == 4 && leg.labels.size() == len[2]) {
        return affine("B", n);
      }
    }
  }
  return other(n);
}

}  // namespace

IrreducibleVerdict classify_irreducible(const CoxeterGraph& g, VertexSet s) {
  if (s.empty()) throw PreconditionError("classify_irreducible: empty vertex set");
  if (irreducible_components(g, s).size() != 1) {
    throw PreconditionError("classify_irreducible: " + g.format(s) + " is reducible");
  }
  return detail::classify_component(g, s);
}

IrreducibleVerdict detail::classify_component(const CoxeterGraph& g, VertexSet s) {
  const int n = s.size();
  if (n == 1) return finite("A1", 1, 1);
  if (n == 2) {
    Vertex a = s.least();
    Vertex b = (s - VertexSet::single(a)).least();
    int m = g.label(a, b);
    if (m == CoxeterGraph::kNoEdge) return {IrreducibleKind::kInfiniteDihedral, "", 2, std::nullopt};
    if (m == 3) return finite("A2", 2, 3);
    if (m == 4) return finite("B2", 2, 4);
    if (m == 6) return finite("G2", 2, 6);
    return finite("I2(" + std::to_string(m) + ")", 2, m);
  }

  Diagram d{g, s};
  int edges = 0;
  int max_degree = 0;
  std::vector<Vertex> branches;
  for (Vertex v : s) {
    VertexSet l = d.links(v);
    for (Vertex u : l) {
      if (!g.adjacent(u, v)) return other(n);  // an infinite label in rank >= 3
    }
    int deg = l.size();
    edges += deg;
    max_degree = std::max(max_degree, deg);
    if (deg >= 3) branches.push_back(v);
  }
  edges /= 2;

  if (edges == n) {
    if (max_degree != 2) return other(n);
    for (Vertex v : s) {
      for (Vertex u : d.links(v)) {
        if (g.label(u, v) != 3) return other(n);
      }
    }
    return affine("A", n);
  }
  if (edges != n - 1) return other(n);

  if (max_degree <= 2) {
    Vertex end = s.least();
    for (Vertex v : s) {
      if (d.degree(v) == 1) {
        end = v;
        break;
      }
    }
    return classify_path(d.walk(end, d.links(end).least()), n);
  }
  if (branches.size() == 1 && max_degree == 3) return classify_one_branch(d, branches[0], n);
  if (branches.size() == 1 && max_degree == 4 && n == 5) {
    for (Vertex v : s) {
      for (Vertex u : d.links(v)) {
        if (g.label(u, v) != 3) return other(n);
      }
    }
    return affine("D", n);
  }
  if (branches.size() == 2 && max_degree == 3) {
    for (Vertex v : s) {
      for (Vertex u : d.links(v)) {
        if (g.label(u, v) != 3) return other(n);
      }
    }
    for (Vertex b : branches) {
      int leaves = 0;
      for (Vertex u : d.links(b)) leaves += d.degree(u) == 1 ? 1 : 0;
      if (leaves != 2) return other(n);
    }
    return affine("D", n);
  }
  return other(n);
}

bool is_spherical(const CoxeterGraph& g, VertexSet s) {
  // Any non-adjacent pair generates an infinite dihedral group.
  for (Vertex v : s) {
    if (!(s - VertexSet::single(v)).subset_of(g.neighbors(v))) return false;
  }
  for (VertexSet c : irreducible_components(g, s)) {
    if (!detail::classify_component(g, c).finite()) return false;
  }
  return true;
}

int longest_element_length(const CoxeterGraph& g, VertexSet s) {
  int total = 0;
  for (VertexSet c : irreducible_components(g, s)) {
    auto v = detail::classify_component(g, c);
    if (!v.finite()) throw PreconditionError(g.format(s) + " is not spherical");
    total += *v.longest_element_length;
  }
  return total;
}

GroupConstants compute_constants(const CoxeterGraph& g) {
  GroupConstants c;
  c.v = static_cast<int>(g.size());
  c.r = g.max_label();
  for_each_spherical(g, [&](VertexSet k) { c.m = std::max(c.m, longest_element_length(g, k)); });
  return c;
}

EndsVerdict ends_verdict(const CoxeterGraph& g) {
  const VertexSet all = g.vertices();
  if (is_spherical(g, all)) return {EndsKind::kFiniteGroup, std::nullopt};
  if (g.connected_components(all).size() > 1) return {EndsKind::kMultiEnded, VertexSet{}};

  int infinite = 0;
  bool dihedral = false;
  for (VertexSet c : irreducible_components(g, all)) {
    auto v = detail::classify_component(g, c);
    if (!v.finite()) {
      ++infinite;
      dihedral = v.kind == IrreducibleKind::kInfiniteDihedral;
    }
  }
  if (infinite == 1 && dihedral) return {EndsKind::kTwoEnded, std::nullopt};

  std::vector<VertexSet> separators;
  for_each_spherical(g, [&](VertexSet k) {
    VertexSet rest = all - k;
    if (!rest.empty() && g.connected_components(rest).size() > 1) separators.push_back(k);
  });
  if (!separators.empty()) {
    auto best = *std::min_element(separators.begin(), separators.end(), set_order_less);
    return {EndsKind::kMultiEnded, best};
  }
  return {EndsKind::kOneEnded, std::nullopt};
}

}  // namespace cox
