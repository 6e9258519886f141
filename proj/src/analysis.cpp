#include "cox/analysis.hpp"

#include <string>

namespace cox {

Analysis::Analysis(const CoxeterGraph& g, AnalysisOptions options)
    : options_(options),
      engine_(g, options.orbit_cap),
      wide_((check_size_cap(g, options.size_cap), g), options.size_cap),
      constants_(compute_constants(g)) {}

const EndsVerdict& Analysis::ends() const {
  std::call_once(ends_once_, [&] { ends_ = ends_verdict(graph()); });
  return *ends_;
}

const AvoidanceReport& Analysis::wide_spherical_avoidance() const {
  std::call_once(wsa_once_,
                 [&] { wsa_ = is_wide_spherical_avoidant(graph(), options_.size_cap); });
  return *wsa_;
}

bool Analysis::affine_free() const {
  std::call_once(affine_once_, [&] { affine_free_ = is_affine_free(graph(), options_.size_cap); });
  return *affine_free_;
}

void Analysis::require_fan_hypotheses(const char* operation) const {
  if (ends().kind != EndsKind::kOneEnded) {
    throw PreconditionError(std::string(operation) + ": graph is not one-ended (" +
                            to_string(ends().kind) + ")");
  }
  if (!wide_spherical_avoidance().holds) {
    throw PreconditionError(std::string(operation) +
                            ": graph is not wide-spherical-avoidant");
  }
}

void Analysis::require_multitail_hypotheses(const char* operation) const {
  if (!affine_free()) {
    throw PreconditionError(std::string(operation) + ": graph is not affine-free");
  }
  require_fan_hypotheses(operation);
}

}  // namespace cox
