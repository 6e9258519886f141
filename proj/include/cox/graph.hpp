#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cox/error.hpp"

namespace cox {

using Vertex = std::uint8_t;
inline constexpr std::size_t kMaxVertices = 64;

// Subset of a graph's vertices, one bit per vertex index.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet first(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr Vertex least() const { return static_cast<Vertex>(std::countr_zero(bits_)); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

  std::vector<Vertex> members() const;

  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

// Order used whenever lists of vertex sets are sorted: by size, then by the
// sorted member sequence.
bool set_order_less(VertexSet a, VertexSet b);

struct Edge {
  Vertex u;
  Vertex v;
  int label;
  bool operator==(const Edge&) const = default;
};

// Labeled simplicial graph. A missing edge stands for label infinity.
class CoxeterGraph {
 public:
  static constexpr int kNoEdge = 0;

  CoxeterGraph() = default;
  CoxeterGraph(std::vector<std::string> names, const std::vector<Edge>& edges);

  std::size_t size() const { return names_.size(); }
  VertexSet vertices() const { return VertexSet::first(size()); }
  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Vertex> find(std::string_view name) const;
  Vertex index_of(std::string_view name) const;  // throws ParseError

  int label(Vertex a, Vertex b) const { return labels_[a * size() + b]; }
  bool adjacent(Vertex a, Vertex b) const { return adjacent_[a].contains(b); }
  bool commute(Vertex a, Vertex b) const { return commuting_[a].contains(b); }
  VertexSet neighbors(Vertex v) const { return adjacent_[v]; }
  VertexSet commuting(Vertex v) const { return commuting_[v]; }
  // Vertices adjacent to every member of s (members of s excluded).
  VertexSet common_neighbors(VertexSet s) const;

  std::vector<Edge> edges() const;
  int max_label() const;
  bool right_angled() const;

  CoxeterGraph induced(VertexSet s) const;
  // Connected components of the plain graph restricted to s, by least vertex.
  std::vector<VertexSet> connected_components(VertexSet s) const;

  std::string format(VertexSet s) const;  // "{a, b}"

  bool operator==(const CoxeterGraph&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::uint16_t> labels_;
  std::vector<VertexSet> adjacent_;
  std::vector<VertexSet> commuting_;
};

// Parse line-oriented text ("v name", "e u v m", '#' comments; ';' also
// separates statements) or the JSON object form.
CoxeterGraph parse_graph(std::string_view text);
CoxeterGraph load_graph(const std::string& path);
std::string serialize(const CoxeterGraph& g);

// Components of the non-commuting relation on s, ordered by least vertex.
std::vector<VertexSet> irreducible_components(const CoxeterGraph& g, VertexSet s);

VertexSet parse_vertex_set(const CoxeterGraph& g, std::string_view text);

}  // namespace cox
