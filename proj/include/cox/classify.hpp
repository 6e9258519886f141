#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cox/avoidance.hpp"
#include "cox/classification.hpp"

namespace cox {

enum class VerdictCase {
  kEmptyBoundaryFiniteOrWide,
  kDisconnectedMultiEnded,
  kConnectedLocallyConnected,
  kDisconnectedNotWideAvoidant,
  kTheoremAppliesA,
  kTheoremAppliesC,
  kUnknownConjectureOpen,
};

// W = W_{gamma1} *_{W_delta} W_{gamma2} with delta = gamma1 ∩ gamma2.
struct Splitting {
  VertexSet gamma1;
  VertexSet delta;
  VertexSet gamma2;
};

struct Hypotheses {
  std::optional<bool> affine_free;
  std::optional<bool> one_ended;
  std::optional<bool> wide_spherical_avoidant;
  std::optional<bool> wide_avoidant;
};

struct ClassificationVerdict {
  VerdictCase kind = VerdictCase::kUnknownConjectureOpen;
  bool right_angled = false;
  bool finite = false;
  std::optional<WideDecomposition> wide;
  EndsVerdict ends;
  std::optional<AvoidanceWitness> avoidance;
  std::optional<Splitting> splitting;
  Hypotheses hypotheses;
  GroupConstants constants;
};

ClassificationVerdict classify(const CoxeterGraph& g, std::size_t cap = kDefaultSizeCap);

// Splitting read off from an avoidance failure (Pi, s, t) of a non-wide graph.
Splitting splitting_from_witness(const CoxeterGraph& g, const AvoidanceWitness& w);
// Problems with a claimed splitting; empty when it is valid.
std::vector<std::string> check_splitting(const CoxeterGraph& g, const Splitting& s,
                                         std::size_t cap = kDefaultSizeCap);
// Problems with the witnesses attached to a verdict; empty when consistent.
std::vector<std::string> check_verdict(const CoxeterGraph& g, const ClassificationVerdict& v,
                                       std::size_t cap = kDefaultSizeCap);

std::string to_string(VerdictCase c);

}  // namespace cox
