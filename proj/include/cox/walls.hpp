#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cox/avoidance.hpp"
#include "cox/word.hpp"

namespace cox {

inline constexpr int kDefaultOrderCap = 64;

struct BallEdge {
  std::size_t from;  // the shorter endpoint
  std::size_t to;
  Vertex label;
};

// Ball of the Cayley graph (the 1-skeleton of the Davis complex) around 1.
struct CayleyBall {
  int radius = 0;
  std::vector<GroupElement> elements;  // breadth-first order
  std::vector<BallEdge> edges;
};

CayleyBall build_ball(const WordEngine& engine, int radius, std::size_t cap);
std::string to_dot(const CayleyBall& ball, const WordEngine& engine);

struct Crossing {
  bool crosses = false;
  bool cap_reached = false;
  int order = 0;  // order of r1 r2 when it was found
};

Crossing walls_cross(const WordEngine& engine, const Reflection& r1, const Reflection& r2,
                     int order_cap = kDefaultOrderCap);

// True when the wall of r has g1 and g2 on different sides.
bool wall_separates(const WordEngine& engine, const Reflection& r, const GroupElement& g1,
                    const GroupElement& g2);

struct Pencil {
  std::vector<Reflection> walls;
  std::vector<std::size_t> edges;  // 1-based positions along the word
};

Pencil find_pencil(const WordEngine& engine, const Word& w, int order_cap = kDefaultOrderCap);
// Empty when the pencil is pairwise non-crossing and linearly separated.
std::vector<std::string> verify_pencil(const WordEngine& engine, const Word& w, const Pencil& p,
                                       int order_cap = kDefaultOrderCap);

struct WindowReport {
  bool pass = true;
  std::optional<std::pair<std::size_t, std::size_t>> range;  // 1-based, inclusive
  std::optional<VertexSet> wide;
  bool within_proven_hypothesis = true;  // false when the graph has affine pieces
};

WindowReport morse_window_check(const WordEngine& engine, const WideIndex& wide, const Word& w,
                                std::size_t k, bool affine_free);

}  // namespace cox
