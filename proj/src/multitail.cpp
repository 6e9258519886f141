#include "cox/multitail.hpp"

#include <algorithm>

namespace cox {

std::string to_string(StepCase c) { return c == StepCase::kPrepend ? "2a" : "2b"; }

namespace {

bool contains(const std::vector<Reflection>& walls, const Reflection& r) {
  return std::find(walls.begin(), walls.end(), r) != walls.end();
}

}  // namespace

MultiTailFilter build_multitail_filter(const Analysis& a, const Word& alpha, const Word& beta,
                                       std::size_t n, const MultiTailOptions& options) {
  a.require_multitail_hypotheses("build_multitail_filter");
  const WordEngine& engine = a.engine();
  if (!engine.is_geodesic(alpha) || !engine.is_geodesic(beta)) {
    throw PreconditionError("build_multitail_filter: rays must be geodesic");
  }
  if (alpha.size() < n || beta.size() < n) {
    throw PreconditionError("build_multitail_filter: rays shorter than the level");
  }
  const std::size_t ray_length =
      options.ray_length ? options.ray_length : static_cast<std::size_t>(std::max(options.depth, 1) + 1);

  MultiTailFilter out;
  out.level = n;
  const Word alpha_n = slice(alpha, 0, n);
  const Word beta_n = slice(beta, 0, n);
  const GroupElement start = engine.normalize(alpha_n);
  out.sigma = engine.normalize(concat(reversed(alpha_n), beta_n)).word;
  const std::size_t d = out.sigma.size();

  out.gammas.resize(d + 1);
  out.gammas[0] = alpha_n;
  for (std::size_t i = 1; i < d; ++i) {
    out.gammas[i] = engine.multiply(start, slice(out.sigma, 0, i)).word;
  }
  out.gammas[d] = beta_n;

  out.rays.push_back(slice(alpha, n, alpha.size()));
  for (std::size_t k = 1; k <= d; ++k) {
    const Vertex s = out.sigma[k - 1];
    const GroupElement corner = engine.multiply(start, slice(out.sigma, 0, k - 1));
    MultiTailStep step;
    step.k = k;
    step.letter = s;
    step.wall = engine.make_reflection(corner, s);
    step.crosses_previous = contains(engine.edge_reflections(out.gammas[k - 1]), step.wall);
    step.crosses_next = contains(engine.edge_reflections(out.gammas[k]), step.wall);
    if (step.crosses_previous == step.crosses_next) {
      throw ConstructionError("build_multitail_filter: step " + std::to_string(k) +
                              ": the wall crosses " +
                              (step.crosses_previous ? "both tails" : "neither tail"));
    }
    Word ray;
    if (step.crosses_previous) {
      step.kind = StepCase::kPrepend;
      ray = concat({s}, out.rays[k - 1]);
    } else {
      step.kind = StepCase::kFreshRay;
      const Word& tail = out.gammas[k];
      try {
        Extension ext = extend_geodesic(engine, a.wide(), a.constants(), tail,
                                        tail.size() + ray_length);
        ray = slice(ext.word, tail.size(), ext.word.size());
      } catch (const Error& e) {
        throw ConstructionError("build_multitail_filter: step " + std::to_string(k) + ": " +
                                e.what());
      }
      if (!engine.is_geodesic(concat(concat(out.gammas[k - 1], {s}), ray))) {
        throw ConstructionError("build_multitail_filter: step " + std::to_string(k) +
                                ": previous tail, step edge and fresh ray are not geodesic");
      }
    }
    if (!engine.is_geodesic(concat(out.gammas[k], ray))) {
      throw ConstructionError("build_multitail_filter: step " + std::to_string(k) +
                              ": tail followed by its ray is not geodesic");
    }
    out.rays.push_back(std::move(ray));
    out.case_trace.push_back(std::move(step));
  }

  auto add_filter = [&](const Word& tail, const Word& left, const Word& right, std::size_t k) {
    try {
      out.constituent_filters.push_back(build_filter(a, left, right, options.depth, tail));
    } catch (const Error& e) {
      throw ConstructionError("build_multitail_filter: filter at step " + std::to_string(k) +
                              ": " + e.what());
    }
    out.tails.push_back(tail);
  };
  for (const auto& step : out.case_trace) {
    if (step.kind != StepCase::kFreshRay) continue;
    const std::size_t j = step.k;
    add_filter(out.gammas[j - 1], out.rays[j - 1], concat({step.letter}, out.rays[j]), j - 1);
  }
  add_filter(out.gammas[d], out.rays[d], slice(beta, n, beta.size()), d);
  return out;
}

}  // namespace cox
