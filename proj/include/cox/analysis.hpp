#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "cox/avoidance.hpp"
#include "cox/classification.hpp"
#include "cox/word.hpp"

namespace cox {

struct AnalysisOptions {
  std::size_t size_cap = kDefaultSizeCap;
  std::size_t orbit_cap = WordEngine::kDefaultOrbitCap;
};

// Everything the geometric constructions need to know about one graph,
// computed once. Hypothesis checks run on first use.
class Analysis {
 public:
  explicit Analysis(const CoxeterGraph& g, AnalysisOptions options = {});

  const CoxeterGraph& graph() const { return engine_.graph(); }
  const WordEngine& engine() const { return engine_; }
  const WideIndex& wide() const { return wide_; }
  const GroupConstants& constants() const { return constants_; }
  const AnalysisOptions& options() const { return options_; }

  const EndsVerdict& ends() const;
  const AvoidanceReport& wide_spherical_avoidance() const;
  bool affine_free() const;

  // Throws PreconditionError unless one-ended and wide-spherical-avoidant.
  void require_fan_hypotheses(const char* operation) const;
  // Additionally requires affine-freeness.
  void require_multitail_hypotheses(const char* operation) const;

 private:
  AnalysisOptions options_;
  WordEngine engine_;
  WideIndex wide_;
  GroupConstants constants_;

  mutable std::once_flag ends_once_, wsa_once_, affine_once_;
  mutable std::optional<EndsVerdict> ends_;
  mutable std::optional<AvoidanceReport> wsa_;
  mutable std::optional<bool> affine_free_;
};

}  // namespace cox
