#pragma once

#include <optional>
#include <string>

#include "cox/graph.hpp"

namespace cox {

enum class IrreducibleKind { kFinite, kAffine, kInfiniteDihedral, kOtherInfinite };

struct IrreducibleVerdict {
  IrreducibleKind kind = IrreducibleKind::kOtherInfinite;
  std::string name;  // "A3", "I2(7)", "A~2"; empty for the infinite kinds
  int rank = 0;
  std::optional<int> longest_element_length;  // present iff finite

  bool finite() const { return kind == IrreducibleKind::kFinite; }
  bool affine() const { return kind == IrreducibleKind::kAffine; }
};

struct GroupConstants {
  int v = 0;  // vertex count
  int m = 0;  // largest longest-element length over spherical subsets
  int r = 2;  // largest edge label

  // Bound on off-boundary tree paths with wide label inside a filter.
  long long product_region_bound() const;
};

enum class EndsKind { kFiniteGroup, kTwoEnded, kOneEnded, kMultiEnded };

struct EndsVerdict {
  EndsKind kind = EndsKind::kOneEnded;
  std::optional<VertexSet> witness;  // separating spherical set when multi-ended
};

IrreducibleVerdict classify_irreducible(const CoxeterGraph& g, VertexSet s);
bool is_spherical(const CoxeterGraph& g, VertexSet s);
// Longest-element length of a spherical subset (sum over factors).
int longest_element_length(const CoxeterGraph& g, VertexSet s);
GroupConstants compute_constants(const CoxeterGraph& g);
EndsVerdict ends_verdict(const CoxeterGraph& g);

// Calls visit(k) for every nonempty spherical subset, in increasing bit order
// of the generating clique search. Spherical sets are cliques, and subsets of
// spherical sets are spherical, which keeps the search small.
template <typename Visit>
void for_each_spherical(const CoxeterGraph& g, Visit&& visit);

std::string to_string(IrreducibleKind k);
std::string to_string(EndsKind k);

// -- implementation of the template -------------------------------------

namespace detail {
// classify_irreducible without the irreducibility check.
IrreducibleVerdict classify_component(const CoxeterGraph& g, VertexSet s);

template <typename Visit>
void spherical_dfs(const CoxeterGraph& g, VertexSet current, VertexSet candidates, Visit& visit) {
  for (Vertex v : candidates) {
    VertexSet next = current;
    next.insert(v);
    if (!is_spherical(g, next)) continue;
    visit(next);
    VertexSet later(candidates.bits() & ~((std::uint64_t{2} << v) - 1));
    spherical_dfs(g, next, later & g.neighbors(v), visit);
  }
}
}  // namespace detail

template <typename Visit>
void for_each_spherical(const CoxeterGraph& g, Visit&& visit) {
  detail::spherical_dfs(g, VertexSet{}, g.vertices(), visit);
}

}  // namespace cox
