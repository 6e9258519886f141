#include "cox/word.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace cox {

namespace {

constexpr std::size_t kMemoLimit = 2'000'000;

std::string to_key(const Word& w) { return std::string(w.begin(), w.end()); }
Word to_word(const std::string& s) { return Word(s.begin(), s.end()); }

VertexSet support_of(const std::string& s) {
  VertexSet out;
  for (char c : s) out.insert(static_cast<Vertex>(c));
  return out;
}

}  // namespace

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word slice(const Word& w, std::size_t from, std::size_t to) {
  to = std::min(to, w.size());
  if (from >= to) return {};
  return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

VertexSet support(const Word& w) {
  VertexSet out;
  for (Vertex v : w) out.insert(v);
  return out;
}

WordEngine::WordEngine(CoxeterGraph g, std::size_t orbit_cap)
    : graph_(std::move(g)), orbit_cap_(orbit_cap) {
  non_right_.assign(graph_.size(), VertexSet{});
  for (const Edge& e : graph_.edges()) {
    if (e.label >= 3) {
      non_right_[e.u].insert(e.v);
      non_right_[e.v].insert(e.u);
    }
  }
}

bool WordEngine::right_angled_support(VertexSet s) const {
  for (Vertex v : s) {
    if (non_right_[v].intersects(s)) return false;
  }
  return true;
}

// -- right-angled support: commutation classes --------------------------

std::string WordEngine::ra_append(std::string cur, char s) const {
  const Vertex sv = static_cast<Vertex>(s);
  for (std::size_t j = cur.size(); j-- > 0;) {
    const Vertex c = static_cast<Vertex>(cur[j]);
    if (c == sv) {
      cur.erase(j, 1);
      return cur;
    }
    if (!graph_.commute(c, sv)) break;
  }
  cur.push_back(s);
  return cur;
}

std::string WordEngine::ra_canonical(const std::string& reduced) const {
  // Lex-least linear extension of the heap: repeatedly emit the least letter
  // that has no unused non-commuting letter in front of it.
  const std::size_t n = reduced.size();
  std::vector<int> blockers(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!graph_.commute(static_cast<Vertex>(reduced[i]), static_cast<Vertex>(reduced[j]))) {
        ++blockers[i];
      }
    }
  }
  std::vector<char> used(n, 0);
  std::string out;
  out.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i] || blockers[i] != 0) continue;
      if (best == n || reduced[i] < reduced[best]) best = i;
    }
    used[best] = 1;
    out.push_back(reduced[best]);
    for (std::size_t k = best + 1; k < n; ++k) {
      if (!used[k] &&
          !graph_.commute(static_cast<Vertex>(reduced[best]), static_cast<Vertex>(reduced[k]))) {
        --blockers[k];
      }
    }
  }
  return out;
}

std::uint64_t WordEngine::ra_endings(const std::string& reduced) const {
  VertexSet later;
  VertexSet endings;
  for (std::size_t i = reduced.size(); i-- > 0;) {
    const Vertex s = static_cast<Vertex>(reduced[i]);
    if (later.subset_of(graph_.commuting(s))) endings.insert(s);
    later.insert(s);
  }
  return endings.bits();
}

// -- general support: braid orbits ----------------------------------------

std::vector<std::string> WordEngine::orbit(const std::string& reduced, std::size_t cap) const {
  std::unordered_set<std::string> seen{reduced};
  std::deque<std::string> queue{reduced};
  const std::size_t n = reduced.size();
  while (!queue.empty()) {
    std::string w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const Vertex a = static_cast<Vertex>(w[i]);
      const Vertex b = static_cast<Vertex>(w[i + 1]);
      if (a == b) continue;
      const std::size_t m = static_cast<std::size_t>(graph_.label(a, b));
      if (m == CoxeterGraph::kNoEdge || i + m > n) continue;
      bool alternating = true;
      for (std::size_t k = 2; k < m && alternating; ++k) {
        alternating = w[i + k] == w[i + (k % 2)];
      }
      if (!alternating) continue;
      std::string next = w;
      for (std::size_t k = 0; k < m; ++k) next[i + k] = static_cast<char>(k % 2 == 0 ? b : a);
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw CapExceeded("braid orbit too large", cap);
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::shared_ptr<const WordEngine::Summary> WordEngine::compute_summary(
    const std::string& reduced) const {
  auto words = orbit(reduced, orbit_cap_);
  auto out = std::make_shared<Summary>();
  out->canonical = *std::min_element(words.begin(), words.end());
  std::vector<const std::string*> best_by_last(graph_.size(), nullptr);
  for (const auto& w : words) {
    if (w.empty()) continue;
    const Vertex last = static_cast<Vertex>(w.back());
    out->endings |= std::uint64_t{1} << last;
    if (!best_by_last[last] || w < *best_by_last[last]) best_by_last[last] = &w;
  }
  for (std::size_t v = 0; v < best_by_last.size(); ++v) {
    if (best_by_last[v]) {
      out->drop.emplace_back(static_cast<Vertex>(v),
                             best_by_last[v]->substr(0, best_by_last[v]->size() - 1));
    }
  }
  return out;
}

std::shared_ptr<const WordEngine::Summary> WordEngine::summary(const std::string& reduced) const {
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = memo_.find(reduced); it != memo_.end()) return it->second;
  }
  auto fresh = compute_summary(reduced);
  std::lock_guard lock(memo_mutex_);
  if (memo_.size() > kMemoLimit) memo_.clear();
  memo_.emplace(reduced, fresh);
  memo_.emplace(fresh->canonical, fresh);
  return fresh;
}

std::string WordEngine::general_append(const std::string& canonical, char s) const {
  auto here = summary(canonical);
  if ((here->endings >> static_cast<Vertex>(s)) & 1U) {
    for (const auto& [letter, prefix] : here->drop) {
      if (letter == static_cast<Vertex>(s)) return summary(prefix)->canonical;
    }
  }
  return summary(canonical + s)->canonical;
}

// -- public interface ----------------------------------------------------

GroupElement WordEngine::normalize(const Word& w) const {
  for (Vertex v : w) {
    if (v >= graph_.size()) throw PreconditionError("letter outside the generating set");
  }
  std::string cur;
  if (right_angled_support(support(w))) {
    for (Vertex v : w) cur = ra_append(std::move(cur), static_cast<char>(v));
    return {to_word(ra_canonical(cur))};
  }
  for (Vertex v : w) cur = general_append(cur, static_cast<char>(v));
  return {to_word(cur)};
}

bool WordEngine::is_geodesic(const Word& w) const { return normalize(w).length() == w.size(); }

GroupElement WordEngine::append(const GroupElement& g, Vertex s) const {
  VertexSet sup = support(g.word);
  sup.insert(s);
  if (right_angled_support(sup)) {
    return {to_word(ra_canonical(ra_append(to_key(g.word), static_cast<char>(s))))};
  }
  return {to_word(general_append(to_key(g.word), static_cast<char>(s)))};
}

GroupElement WordEngine::multiply(const GroupElement& a, const Word& w) const {
  return normalize(concat(a.word, w));
}

std::vector<Word> WordEngine::tits_orbit(const Word& w) const { return tits_orbit(w, orbit_cap_); }

std::vector<Word> WordEngine::tits_orbit(const Word& w, std::size_t cap) const {
  if (!is_geodesic(w)) throw PreconditionError("tits_orbit: word is not geodesic");
  auto words = orbit(to_key(w), cap);
  std::vector<Word> out;
  out.reserve(words.size());
  for (const auto& s : words) out.push_back(to_word(s));
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet WordEngine::ending_letters(const GroupElement& g) const {
  const std::string key = to_key(g.word);
  if (right_angled_support(support_of(key))) return VertexSet(ra_endings(key));
  return VertexSet(summary(key)->endings);
}

VertexSet WordEngine::ending_letters(const Word& w) const {
  GroupElement g = normalize(w);
  if (g.length() != w.size()) throw PreconditionError("ending_letters: word is not geodesic");
  return ending_letters(g);
}

Reflection WordEngine::make_reflection(const GroupElement& conjugator, Vertex s) const {
  Word w = conjugator.word;
  w.push_back(s);
  w.insert(w.end(), conjugator.word.rbegin(), conjugator.word.rend());
  return {normalize(w), s};
}

Reflection WordEngine::reflection_of_edge(const Word& w, std::size_t i) const {
  if (i < 1 || i > w.size()) throw PreconditionError("reflection_of_edge: index out of range");
  if (!is_geodesic(w)) throw PreconditionError("reflection_of_edge: word is not geodesic");
  Word conj = slice(w, 0, i - 1);
  Word r = conj;
  r.push_back(w[i - 1]);
  r.insert(r.end(), conj.rbegin(), conj.rend());
  return {normalize(r), w[i - 1]};
}

std::vector<Reflection> WordEngine::edge_reflections(const Word& w) const {
  // Conjugates of each letter by its prefix; no geodesy requirement here so
  // the wall criterion for geodesy can be tested on arbitrary words.
  std::vector<Reflection> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word r = slice(w, 0, i);
    r.push_back(w[i]);
    for (std::size_t j = i; j-- > 0;) r.push_back(w[j]);
    out.push_back({normalize(r), w[i]});
  }
  return out;
}

Word WordEngine::parse(std::string_view text) const {
  std::istringstream in{std::string(text)};
  Word out;
  for (std::string tok; in >> tok;) out.push_back(graph_.index_of(tok));
  return out;
}

std::string WordEngine::format(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += graph_.name(w[i]);
  }
  return out;
}

std::size_t WordEngine::memo_size() const {
  std::lock_guard lock(memo_mutex_);
  return memo_.size();
}

void WordEngine::clear_memo() const {
  std::lock_guard lock(memo_mutex_);
  memo_.clear();
}

// -- wide tails and extensions --------------------------------------------

WideTail wide_tail(const WordEngine& engine, const WideIndex& wide, const Word& w) {
  if (!engine.is_geodesic(w)) throw PreconditionError("wide_tail: word is not geodesic");
  VertexSet labels;
  std::size_t start = w.size();
  std::optional<VertexSet> delta;
  for (std::size_t j = w.size(); j-- > 0;) {
    VertexSet next = labels;
    next.insert(w[j]);
    auto hit = wide.maximal_containing(next);
    if (!hit) break;
    labels = next;
    start = j;
    delta = hit;
  }
  return {slice(w, start, w.size()), delta};
}

WideTail wide_tail(const CoxeterGraph& g, const Word& w) {
  WordEngine engine(g);
  WideIndex wide(g);
  return wide_tail(engine, wide, w);
}

Extension extend_geodesic(const WordEngine& engine, const WideIndex& wide,
                          const GroupConstants& constants, const Word& w,
                          std::size_t target_len) {
  const CoxeterGraph& g = engine.graph();
  GroupElement current = engine.normalize(w);
  if (current.length() != w.size()) throw PreconditionError("extend_geodesic: word is not geodesic");
  Extension out{w, w.size(), constants.m + constants.v};
  while (out.word.size() < target_len) {
    const VertexSet ending = engine.ending_letters(current);
    WideTail tail = wide_tail(engine, wide, out.word);
    VertexSet tail_labels = support(tail.suffix);

    std::optional<Vertex> choice;
    VertexSet first_blocking = ending;
    bool first = true;
    auto consider = [&](VertexSet delta) {
      VertexSet blocking = delta | ending;
      if (first) {
        first_blocking = blocking;
        first = false;
      }
      VertexSet legal = g.vertices() - blocking;
      if (!legal.empty()) choice = legal.least();
    };
    if (tail.suffix.empty()) {
      consider(VertexSet{});
    } else {
      for (VertexSet delta : wide.all()) {
        if (!tail_labels.subset_of(delta)) continue;
        consider(delta);
        if (choice) break;
      }
    }
    if (!choice) {
      throw PreconditionError("extend_geodesic: no legal letter; blocked by " +
                              g.format(first_blocking));
    }
    out.word.push_back(*choice);
    current = engine.append(current, *choice);
  }
  return out;
}

Extension extend_geodesic(const CoxeterGraph& g, const Word& w, std::size_t target_len) {
  if (is_spherical(g, g.vertices())) {
    throw PreconditionError("extend_geodesic: the group is finite");
  }
  auto wsa = is_wide_spherical_avoidant(g);
  if (!wsa.holds) throw PreconditionError("extend_geodesic: graph is not wide-spherical-avoidant");
  WordEngine engine(g);
  WideIndex wide(g);
  return extend_geodesic(engine, wide, compute_constants(g), w, target_len);
}

}  // namespace cox
