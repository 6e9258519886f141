#pragma once

#include <compare>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cox/avoidance.hpp"
#include "cox/classification.hpp"
#include "cox/graph.hpp"

namespace cox {

using Word = std::vector<Vertex>;

// An element of W, held as its lexicographically least reduced expression.
struct GroupElement {
  Word word;

  std::size_t length() const { return word.size(); }
  bool identity() const { return word.empty(); }
  auto operator<=>(const GroupElement&) const = default;
};

struct Reflection {
  GroupElement element;
  Vertex type_generator = 0;

  // Reflections are equal as group elements; the type generator is determined.
  bool operator==(const Reflection& o) const { return element == o.element; }
};

Word reversed(Word w);
Word concat(const Word& a, const Word& b);
Word slice(const Word& w, std::size_t from, std::size_t to);
VertexSet support(const Word& w);

class WordEngine {
 public:
  static constexpr std::size_t kDefaultOrbitCap = 200000;

  explicit WordEngine(CoxeterGraph g, std::size_t orbit_cap = kDefaultOrbitCap);
  WordEngine(const WordEngine&) = delete;
  WordEngine& operator=(const WordEngine&) = delete;

  const CoxeterGraph& graph() const { return graph_; }
  std::size_t orbit_cap() const { return orbit_cap_; }

  // All reduced expressions of a reduced word, sorted.
  std::vector<Word> tits_orbit(const Word& w) const;
  std::vector<Word> tits_orbit(const Word& w, std::size_t cap) const;

  GroupElement normalize(const Word& w) const;
  bool is_geodesic(const Word& w) const;
  GroupElement append(const GroupElement& g, Vertex s) const;
  GroupElement multiply(const GroupElement& a, const Word& w) const;
  GroupElement inverse(const GroupElement& g) const { return normalize(reversed(g.word)); }

  // Letters some reduced expression ends with. The word must be reduced.
  VertexSet ending_letters(const Word& w) const;
  VertexSet ending_letters(const GroupElement& g) const;

  // The reflection dual to the i-th edge (1-based) of the path spelled by w.
  Reflection reflection_of_edge(const Word& w, std::size_t i) const;
  std::vector<Reflection> edge_reflections(const Word& w) const;
  Reflection make_reflection(const GroupElement& conjugator, Vertex s) const;

  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;

  // Size of the orbit memo; exposed for tests that compare cold and warm runs.
  std::size_t memo_size() const;
  void clear_memo() const;

 private:
  struct Summary {
    std::string canonical;
    std::uint64_t endings = 0;
    // For each ending letter s, the canonical form of element * s.
    std::vector<std::pair<Vertex, std::string>> drop;
  };

  bool right_angled_support(VertexSet s) const;
  std::string ra_append(std::string cur, char s) const;
  std::string ra_canonical(const std::string& reduced) const;
  std::uint64_t ra_endings(const std::string& reduced) const;

  std::shared_ptr<const Summary> summary(const std::string& reduced) const;
  std::shared_ptr<const Summary> compute_summary(const std::string& reduced) const;
  std::string general_append(const std::string& canonical, char s) const;
  std::vector<std::string> orbit(const std::string& reduced, std::size_t cap) const;

  CoxeterGraph graph_;
  std::size_t orbit_cap_;
  std::vector<VertexSet> non_right_;  // neighbours with label >= 3
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<std::string, std::shared_ptr<const Summary>> memo_;
};

struct WideTail {
  Word suffix;
  std::optional<VertexSet> delta;
};

WideTail wide_tail(const WordEngine& engine, const WideIndex& wide, const Word& w);
WideTail wide_tail(const CoxeterGraph& g, const Word& w);

struct Extension {
  Word word;
  std::size_t appended_from = 0;  // index where the new letters start
  int window = 0;                 // windows longer than this avoid wide labels
};

// Greedy extension; checks only geodesy of the input, not the hypotheses on g.
Extension extend_geodesic(const WordEngine& engine, const WideIndex& wide,
                          const GroupConstants& constants, const Word& w,
                          std::size_t target_len);
// Checks the hypotheses on g (wide-spherical-avoidant, infinite) first.
Extension extend_geodesic(const CoxeterGraph& g, const Word& w, std::size_t target_len);

}  // namespace cox
