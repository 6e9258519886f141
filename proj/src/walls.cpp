#include "cox/walls.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cox {

CayleyBall build_ball(const WordEngine& engine, int radius, std::size_t cap) {
  CayleyBall ball;
  ball.radius = radius;
  std::map<Word, std::size_t> index;
  ball.elements.push_back(GroupElement{});
  index.emplace(Word{}, 0);
  const std::size_t n = engine.graph().size();
  for (std::size_t i = 0; i < ball.elements.size(); ++i) {
    const GroupElement here = ball.elements[i];
    if (static_cast<int>(here.length()) >= radius) continue;
    for (std::size_t s = 0; s < n; ++s) {
      GroupElement next = engine.append(here, static_cast<Vertex>(s));
      if (next.length() < here.length()) continue;
      auto [it, fresh] = index.emplace(next.word, ball.elements.size());
      if (fresh) {
        if (ball.elements.size() >= cap) {
          throw CapExceeded("ball reached " + std::to_string(ball.elements.size()) + " elements",
                            cap);
        }
        ball.elements.push_back(std::move(next));
      }
      ball.edges.push_back({i, it->second, static_cast<Vertex>(s)});
    }
  }
  return ball;
}

std::string to_dot(const CayleyBall& ball, const WordEngine& engine) {
  std::ostringstream out;
  out << "digraph ball {\n";
  for (std::size_t i = 0; i < ball.elements.size(); ++i) {
    std::string w = engine.format(ball.elements[i].word);
    out << "  n" << i << " [label=\"" << (w.empty() ? "1" : w) << "\"];\n";
  }
  for (const auto& e : ball.edges) {
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << engine.graph().name(e.label)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

Crossing walls_cross(const WordEngine& engine, const Reflection& r1, const Reflection& r2,
                     int order_cap) {
  if (r1 == r2) throw PreconditionError("walls_cross: the two reflections coincide");
  const GroupElement product = engine.normalize(concat(r1.element.word, r2.element.word));
  GroupElement power = product;
  for (int k = 1; k <= order_cap; ++k) {
    if (power.identity()) return {true, false, k};
    power = engine.multiply(power, product.word);
  }
  return {false, true, 0};
}

namespace {

bool shortens(const WordEngine& engine, const Reflection& r, const GroupElement& g) {
  const std::size_t after = engine.multiply(r.element, g.word).length();
  if (after == g.length()) {
    throw PreconditionError("wall_separates: element lies on the wall");
  }
  return after < g.length();
}

}  // namespace

bool wall_separates(const WordEngine& engine, const Reflection& r, const GroupElement& g1,
                    const GroupElement& g2) {
  if (g1 == g2) return false;
  return shortens(engine, r, g1) != shortens(engine, r, g2);
}

namespace {

// Exhaustive search for a largest pairwise non-crossing subset.
std::vector<std::size_t> largest_free_set(const std::vector<std::vector<char>>& crosses) {
  const std::size_t n = crosses.size();
  std::vector<std::size_t> best;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (cur.size() + (n - i) <= best.size()) return;
    if (i == n) {
      best = cur;
      return;
    }
    bool ok = std::none_of(cur.begin(), cur.end(), [&](std::size_t j) { return crosses[i][j]; });
    if (ok) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
    self(self, i + 1);
  };
  rec(rec, 0);
  return best;
}

}  // namespace

Pencil find_pencil(const WordEngine& engine, const Word& w, int order_cap) {
  if (!engine.is_geodesic(w)) throw PreconditionError("find_pencil: word is not geodesic");
  const auto walls = engine.edge_reflections(w);
  const std::size_t n = walls.size();
  std::vector<std::vector<char>> crosses(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool c = walls_cross(engine, walls[i], walls[j], order_cap).crosses;
      crosses[i][j] = crosses[j][i] = c;
    }
  }
  // Along a geodesic, non-crossing is transitive in the order of crossing, so a
  // largest pencil is a longest chain.
  std::vector<std::size_t> chain_len(n, 1);
  std::vector<std::ptrdiff_t> prev(n, -1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!crosses[i][j] && chain_len[i] + 1 > chain_len[j]) {
        chain_len[j] = chain_len[i] + 1;
        prev[j] = static_cast<std::ptrdiff_t>(i);
      }
    }
  }
  std::vector<std::size_t> chosen;
  if (n > 0) {
    std::ptrdiff_t at = std::max_element(chain_len.begin(), chain_len.end()) - chain_len.begin();
    for (; at >= 0; at = prev[at]) chosen.push_back(static_cast<std::size_t>(at));
    std::reverse(chosen.begin(), chosen.end());
  }
  bool pairwise = true;
  for (std::size_t a = 0; a < chosen.size() && pairwise; ++a) {
    for (std::size_t b = a + 1; b < chosen.size() && pairwise; ++b) {
      pairwise = !crosses[chosen[a]][chosen[b]];
    }
  }
  if (!pairwise) {
    // Only reachable when a crossing was missed because of the order cap.
    if (n > 40) throw ConstructionError("find_pencil: crossing data is not transitive");
    chosen = largest_free_set(crosses);
  }
  Pencil out;
  for (std::size_t i : chosen) {
    out.walls.push_back(walls[i]);
    out.edges.push_back(i + 1);
  }
  return out;
}

std::vector<std::string> verify_pencil(const WordEngine& engine, const Word& w, const Pencil& p,
                                       int order_cap) {
  std::vector<std::string> problems;
  const std::size_t n = p.walls.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (walls_cross(engine, p.walls[a], p.walls[b], order_cap).crosses) {
        problems.push_back("walls at edges " + std::to_string(p.edges[a]) + " and " +
                           std::to_string(p.edges[b]) + " cross");
      }
    }
  }
  // Endpoints of edge i: prefixes of length i-1 and i.
  auto endpoint = [&](std::size_t len) { return engine.normalize(slice(w, 0, len)); };
  for (std::size_t j = 0; j < n; ++j) {
    const Reflection& mid = p.walls[j];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      GroupElement near = endpoint(p.edges[i] - 1);
      GroupElement far = endpoint(p.edges[i]);
      if (wall_separates(engine, mid, near, far)) {
        problems.push_back("wall at edge " + std::to_string(p.edges[j]) +
                           " cuts the edge " + std::to_string(p.edges[i]));
      }
    }
    for (std::size_t i = 0; i < j; ++i) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!wall_separates(engine, mid, endpoint(p.edges[i]), endpoint(p.edges[k]))) {
          problems.push_back("wall at edge " + std::to_string(p.edges[j]) +
                             " does not separate edges " + std::to_string(p.edges[i]) + " and " +
                             std::to_string(p.edges[k]));
        }
      }
    }
  }
  return problems;
}

WindowReport morse_window_check(const WordEngine& engine, const WideIndex& wide, const Word& w,
                                std::size_t k, bool affine_free) {
  if (!engine.is_geodesic(w)) throw PreconditionError("morse_window_check: word is not geodesic");
  WindowReport out;
  out.within_proven_hypothesis = affine_free;
  for (std::size_t start = 0; start + k + 1 <= w.size(); ++start) {
    VertexSet labels = support(slice(w, start, start + k + 1));
    if (auto hit = wide.maximal_containing(labels)) {
      out.pass = false;
      out.range = std::make_pair(start + 1, start + k + 1);
      out.wide = hit;
      return out;
    }
  }
  return out;
}

}  // namespace cox
