#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cox/classification.hpp"
#include "cox/graph.hpp"

namespace cox {

inline constexpr std::size_t kDefaultSizeCap = 20;

enum class WideKind { kTwoInfiniteFactors, kAffineRank3Plus };

struct WideDecomposition {
  VertexSet p;
  VertexSet q;
  WideKind kind = WideKind::kTwoInfiniteFactors;
  bool operator==(const WideDecomposition&) const = default;
};

struct SpecialJoin {
  VertexSet p;
  VertexSet q;
  VertexSet k;
  VertexSet blocked() const { return p | q | k; }
  bool operator==(const SpecialJoin&) const = default;
};

struct AvoidanceWitness {
  VertexSet blocking;
  Vertex s = 0;
  Vertex t = 0;
  std::optional<SpecialJoin> join;  // set by the spherical variant
};

struct AvoidanceReport {
  bool holds = true;
  std::optional<AvoidanceWitness> witness;
};

std::optional<WideDecomposition> wide_decomposition(const CoxeterGraph& g, VertexSet s);
bool is_wide(const CoxeterGraph& g, VertexSet s);

// Every wide decomposition (P, Q) of s: P a union of irreducible components.
std::vector<WideDecomposition> all_wide_decompositions(const CoxeterGraph& g, VertexSet s);

std::vector<VertexSet> enumerate_wide_subgraphs(const CoxeterGraph& g, bool maximal_only,
                                                std::size_t cap = kDefaultSizeCap);
bool is_affine_free(const CoxeterGraph& g, std::size_t cap = kDefaultSizeCap);
std::vector<SpecialJoin> enumerate_special_joins(const CoxeterGraph& g, bool maximal_only,
                                                 std::size_t cap = kDefaultSizeCap);

AvoidanceReport is_wide_avoidant(const CoxeterGraph& g, std::size_t cap = kDefaultSizeCap);
AvoidanceReport is_wide_spherical_avoidant(const CoxeterGraph& g,
                                           std::size_t cap = kDefaultSizeCap);

// True when some path from s to t meets `blocked` at most in {s, t}.
bool avoiding_path_exists(const CoxeterGraph& g, VertexSet blocked, Vertex s, Vertex t);

// Lookup structure over the wide subgraphs of one graph.
class WideIndex {
 public:
  WideIndex() = default;
  explicit WideIndex(const CoxeterGraph& g, std::size_t cap = kDefaultSizeCap);

  const std::vector<VertexSet>& all() const { return all_; }
  const std::vector<VertexSet>& maximal() const { return maximal_; }
  bool contained(VertexSet labels) const;
  // Least (size, then lex) wide subgraph containing `labels`.
  std::optional<VertexSet> smallest_containing(VertexSet labels) const;
  // First maximal wide subgraph containing `labels`.
  std::optional<VertexSet> maximal_containing(VertexSet labels) const;

 private:
  std::vector<VertexSet> all_;      // sorted by set_order_less
  std::vector<VertexSet> maximal_;  // sorted by set_order_less
};

void check_size_cap(const CoxeterGraph& g, std::size_t cap);
std::string to_string(WideKind k);

}  // namespace cox
