#pragma once

#include <vector>

#include "cox/filter.hpp"

namespace cox {

enum class StepCase {
  kPrepend,    // the wall of the step crosses the previous tail: reuse the ray
  kFreshRay,   // the wall crosses the next tail: extend a new ray
};

struct MultiTailStep {
  std::size_t k = 0;  // 1-based position along sigma
  Vertex letter = 0;
  Reflection wall;
  bool crosses_previous = false;
  bool crosses_next = false;
  StepCase kind = StepCase::kPrepend;
};

struct MultiTailFilter {
  std::size_t level = 0;
  Word sigma;                        // geodesic from alpha(n) to beta(n)
  std::vector<Word> gammas;          // gamma_0 .. gamma_d
  std::vector<Word> rays;            // alpha_0 .. alpha_d
  std::vector<Word> tails;           // tails of the constituent filters
  std::vector<FilterDiagram> constituent_filters;
  std::vector<MultiTailStep> case_trace;
};

struct MultiTailOptions {
  int depth = 2;
  std::size_t ray_length = 0;  // 0: max(depth, 1) + 1
};

MultiTailFilter build_multitail_filter(const Analysis& a, const Word& alpha, const Word& beta,
                                       std::size_t n, const MultiTailOptions& options = {});

std::string to_string(StepCase c);

}  // namespace cox
