#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cox/fan.hpp"

namespace cox {

enum class EdgeClass { kL, kR, kI };
enum class Boundary { kNone, kAlpha, kBeta };

struct FilterVertex {
  int id = 0;
  GroupElement element;  // image of the vertex, including the prefix
  Word tree_path;        // labels along the spanning tree from the basepoint
  int level = 0;
  bool top = false;   // top vertex of some polygon
  bool open = false;  // its fan lies beyond the truncation
  int left_out = -1;  // edge ids of the two outgoing edges, when known
  int right_out = -1;
  int fan = -1;       // fan whose apex is this vertex
};

struct FilterEdge {
  int id = 0;
  Vertex label = 0;
  int source = 0;
  int target = 0;
  EdgeClass edge_class = EdgeClass::kI;
  Boundary boundary = Boundary::kNone;
  bool in_tree = true;
  bool top_left = false;
};

struct FilterCell {
  int id = 0;
  int fan = 0;
  int m = 2;
  std::vector<int> left_path;   // edge ids
  std::vector<int> right_path;  // edge ids
  std::vector<int> boundary;    // vertex cycle: apex, up the left side, down the right side
};

struct FilterFan {
  int id = 0;
  int level = 1;
  int apex = 0;
  std::vector<int> fan_edges;
  std::vector<int> cells;
  FanCase fan_case = FanCase::kShortTail;
};

struct FilterDiagram {
  Word prefix;  // path from the identity to the basepoint
  Word alpha;
  Word beta;
  int depth = 0;
  std::vector<FilterVertex> vertices;  // vertex 0 is the basepoint
  std::vector<FilterEdge> edges;
  std::vector<FilterCell> cells;
  std::vector<FilterFan> fans;
};

FilterDiagram build_filter(const Analysis& a, const Word& alpha, const Word& beta, int depth,
                           const Word& prefix = {});

struct FilterCheckOptions {
  std::size_t exhaustive_length = 14;
  std::size_t sampled_paths = 500;
  unsigned seed = 1;
  std::optional<long long> product_region_bound;  // defaults to the constant N
};

struct FilterReport {
  std::vector<Violation> violations;
  std::size_t rooted_paths_checked = 0;
  std::size_t sampled_paths_checked = 0;
  std::size_t tree_paths_checked = 0;
  std::size_t longest_off_boundary_path = 0;
  long long product_region_bound = 0;
  bool ok() const { return violations.empty(); }
};

FilterReport check_filter(const Analysis& a, const FilterDiagram& f,
                          const FilterCheckOptions& options = {});

std::string to_string(EdgeClass c);
std::string to_string(Boundary b);

}  // namespace cox
