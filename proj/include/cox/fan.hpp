#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cox/analysis.hpp"

namespace cox {

enum class FanCase {
  kShortTail,  // wide tail no longer than M: avoid only the ending letters
  kAvoidJoin,  // long wide tail: avoid the blocked set of a special join
  kAvoidWide,  // long wide tail, no usable join: avoid a wide set and the ending letters
};

enum class FanEdgeRole { kFan, kLeftSide, kRightSide };

struct FanEdge {
  int id = 0;
  Vertex label = 0;
  int source = 0;  // local vertex ids; 0 is the end of the base path
  int target = 0;
  FanEdgeRole role = FanEdgeRole::kFan;
  int cell = -1;  // for side edges
  bool top_left = false;
};

struct FanCell {
  Vertex left = 0;  // label of the fan edge on its left
  Vertex right = 0;
  int m = 2;        // the cell is a 2m-gon
  std::vector<int> left_path;   // edge ids, starting with the left fan edge
  std::vector<int> right_path;  // edge ids, starting with the right fan edge
  int top = 0;
};

// A fan over a base path: fan edges f_0..f_r leave the end of the base path
// and consecutive ones bound a 2m-gon.
struct FanDiagram {
  Word base_path;
  std::vector<Vertex> fan_edge_labels;
  std::vector<FanCell> cells;
  std::vector<FanEdge> edges;
  int vertex_count = 1;

  FanCase fan_case = FanCase::kShortTail;
  std::size_t tail_length = 0;
  VertexSet ending;   // ending letters of the base
  VertexSet blocked;  // labels kept off the path's interior
  std::optional<SpecialJoin> join;
  std::optional<VertexSet> avoided_wide;  // wide set certified against the interior

  std::vector<int> top_left_edges() const;
  // Lay out fan edges and cells from fan_edge_labels.
  void layout(const CoxeterGraph& g);
};

struct Violation {
  std::string code;
  std::string detail;
};

struct FanReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

FanDiagram build_fan(const Analysis& a, const Word& base, Vertex x, Vertex y);
FanReport check_fan(const Analysis& a, const FanDiagram& f);

// The two sides of a 2m-gon whose first edges carry `first` and `second`.
Word alternating(Vertex first, Vertex second, int length);

std::string to_string(FanCase c);

}  // namespace cox
