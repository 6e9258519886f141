#include "cox/fan.hpp"

#include <algorithm>
#include <deque>

namespace cox {

std::string to_string(FanCase c) {
  switch (c) {
    case FanCase::kShortTail: return "short-tail";
    case FanCase::kAvoidJoin: return "avoid-join";
    case FanCase::kAvoidWide: return "avoid-wide";
  }
  return "?";
}

Word alternating(Vertex first, Vertex second, int length) {
  Word w;
  for (int k = 0; k < length; ++k) w.push_back(k % 2 == 0 ? first : second);
  return w;
}

std::vector<int> FanDiagram::top_left_edges() const {
  std::vector<int> out;
  for (const auto& e : edges) {
    if (e.top_left) out.push_back(e.id);
  }
  return out;
}

void FanDiagram::layout(const CoxeterGraph& g) {
  edges.clear();
  cells.clear();
  vertex_count = 1;
  auto add_edge = [&](Vertex label, int source, int target, FanEdgeRole role, int cell) {
    int id = static_cast<int>(edges.size());
    edges.push_back({id, label, source, target, role, cell, false});
    return id;
  };
  std::vector<int> fan_ids;
  for (Vertex s : fan_edge_labels) fan_ids.push_back(add_edge(s, 0, vertex_count++, FanEdgeRole::kFan, -1));

  for (std::size_t i = 0; i + 1 < fan_edge_labels.size(); ++i) {
    const Vertex left = fan_edge_labels[i];
    const Vertex right = fan_edge_labels[i + 1];
    const int m = g.label(left, right);
    const int cell = static_cast<int>(cells.size());
    FanCell c{left, right, m, {fan_ids[i]}, {fan_ids[i + 1]}, vertex_count++};
    const Word lambda = alternating(left, right, m);
    const Word rho = alternating(right, left, m);
    int at = edges[fan_ids[i]].target;
    for (int k = 1; k < m; ++k) {
      int to = k == m - 1 ? c.top : vertex_count++;
      c.left_path.push_back(add_edge(lambda[k], at, to, FanEdgeRole::kLeftSide, cell));
      at = to;
    }
    at = edges[fan_ids[i + 1]].target;
    for (int k = 1; k < m; ++k) {
      int to = k == m - 1 ? c.top : vertex_count++;
      c.right_path.push_back(add_edge(rho[k], at, to, FanEdgeRole::kRightSide, cell));
      at = to;
    }
    edges[c.left_path.back()].top_left = true;
    cells.push_back(std::move(c));
  }
}

namespace {

// Shortest path from x to y whose interior avoids `forbidden`, least in lex
// order of vertex sequences among shortest ones.
std::optional<std::vector<Vertex>> lex_shortest_path(const CoxeterGraph& g, Vertex x, Vertex y,
                                                     VertexSet forbidden, bool allow_direct) {
  const VertexSet interior =
      g.vertices() - forbidden - VertexSet::single(x) - VertexSet::single(y);
  std::vector<int> dist(g.size(), -1);
  dist[y] = 0;
  std::deque<Vertex> queue{y};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v) & interior) {
      if (dist[u] >= 0) continue;
      dist[u] = dist[v] + 1;
      queue.push_back(u);
    }
  }
  auto step_ok = [&](Vertex u, int remaining) {
    if (u == y) return remaining == 1;
    return interior.contains(u) && dist[u] == remaining - 1;
  };
  int best = -1;
  for (Vertex u : g.neighbors(x)) {
    int d = -1;
    if (u == y) d = allow_direct ? 1 : -1;
    else if (interior.contains(u) && dist[u] >= 0) d = dist[u] + 1;
    if (d > 0 && (best < 0 || d < best)) best = d;
  }
  if (best < 0) return std::nullopt;
  std::vector<Vertex> path{x};
  int remaining = best;
  Vertex cur = x;
  while (remaining > 0) {
    for (Vertex u : g.neighbors(cur)) {
      if (cur == x && u == y && !allow_direct) continue;
      if (step_ok(u, remaining)) {
        cur = u;
        break;
      }
    }
    path.push_back(cur);
    --remaining;
  }
  return path;
}

// Shortest walk of at least two edges from x to y whose interior avoids
// `forbidden`; the interior may revisit x or y. Lex-least among shortest.
std::optional<std::vector<Vertex>> lex_shortest_walk(const CoxeterGraph& g, Vertex x, Vertex y,
                                                     VertexSet forbidden) {
  const VertexSet allowed = g.vertices() - forbidden;
  // steps[u]: fewest edges from u to y through allowed vertices, at least one.
  std::vector<int> steps(g.size(), -1);
  std::deque<Vertex> queue;
  for (Vertex u : g.neighbors(y) & allowed) {
    steps[u] = 1;
    queue.push_back(u);
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v) & allowed) {
      if (steps[u] >= 0) continue;
      steps[u] = steps[v] + 1;
      queue.push_back(u);
    }
  }
  int best = -1;
  for (Vertex u : g.neighbors(x) & allowed) {
    if (steps[u] > 0 && (best < 0 || steps[u] < best)) best = steps[u];
  }
  if (best < 0) return std::nullopt;
  std::vector<Vertex> walk{x};
  Vertex cur = x;
  for (int remaining = best; remaining > 0; --remaining) {
    for (Vertex u : g.neighbors(cur) & allowed) {
      if (steps[u] == remaining) {
        cur = u;
        break;
      }
    }
    walk.push_back(cur);
  }
  walk.push_back(y);
  return walk;
}

bool infinite(const CoxeterGraph& g, VertexSet s) { return !s.empty() && !is_spherical(g, s); }

bool irreducible_affine3(const CoxeterGraph& g, VertexSet s) {
  if (s.size() < 3 || irreducible_components(g, s).size() != 1) return false;
  return detail::classify_component(g, s).affine();
}

// The special join (C1, D2, K') built from a wide set containing the tail.
std::optional<SpecialJoin> join_from(const CoxeterGraph& g, VertexSet delta, VertexSet tail,
                                     VertexSet ending) {
  const VertexSet k = ending - tail;
  if (!k.empty() && !is_spherical(g, k)) return std::nullopt;
  for (const auto& d : all_wide_decompositions(g, delta)) {
    for (auto [d1, d2] : {std::pair{d.p, d.q}, std::pair{d.q, d.p}}) {
      const VertexSet c1 = tail & d1;
      if (c1.empty() || k.intersects(d2)) continue;
      bool wide = (infinite(g, c1) && infinite(g, d2)) || irreducible_affine3(g, c1);
      if (!wide || !infinite(g, c1)) continue;
      if (!k.subset_of(g.common_neighbors(c1))) continue;
      return SpecialJoin{c1, d2, k};
    }
  }
  return std::nullopt;
}

// Fan edge labels from x to y with at least three edges and interior off
// `blocked`. A direct edge is doubled back unless an endpoint lies in `wide`.
std::optional<std::vector<Vertex>> route(const CoxeterGraph& g, Vertex x, Vertex y,
                                         VertexSet blocked, VertexSet wide) {
  if (x == y) {
    const VertexSet next = g.neighbors(x) - blocked;
    if (next.empty()) return std::nullopt;
    return std::vector<Vertex>{x, next.least(), x};
  }
  auto path = lex_shortest_path(g, x, y, blocked, true);
  if (!path || path->size() > 2) return path;
  if (!wide.contains(x) && !wide.contains(y)) return std::vector<Vertex>{x, y, x, y};
  return lex_shortest_walk(g, x, y, blocked);
}

}  // namespace

FanDiagram build_fan(const Analysis& a, const Word& base, Vertex x, Vertex y) {
  a.require_fan_hypotheses("build_fan");
  const CoxeterGraph& g = a.graph();
  const WordEngine& engine = a.engine();
  if (x >= g.size() || y >= g.size()) throw PreconditionError("build_fan: unknown fan letter");
  const GroupElement start = engine.normalize(base);
  if (start.length() != base.size()) throw PreconditionError("build_fan: base is not geodesic");
  const VertexSet ending = engine.ending_letters(start);
  if (ending.contains(x) || ending.contains(y)) {
    throw PreconditionError("build_fan: base followed by a fan letter is not geodesic");
  }

  FanDiagram fan;
  fan.base_path = base;
  fan.ending = ending;
  const WideTail tail = wide_tail(engine, a.wide(), base);
  fan.tail_length = tail.suffix.size();

  struct Option {
    FanCase kind;
    VertexSet blocked;                // labels kept off the interior
    std::optional<VertexSet> wide;    // wide set the interior must also avoid
    std::optional<SpecialJoin> join;
  };
  std::vector<Option> options;
  if (static_cast<int>(tail.suffix.size()) <= a.constants().m) {
    fan.fan_case = FanCase::kShortTail;
    options.push_back({FanCase::kShortTail, ending, std::nullopt, std::nullopt});
  } else {
    const VertexSet labels = support(tail.suffix);
    std::vector<VertexSet> deltas;
    if (tail.delta) deltas.push_back(*tail.delta);
    for (VertexSet d : a.wide().all()) {
      if (labels.subset_of(d) && (!tail.delta || d != *tail.delta)) deltas.push_back(d);
    }
    for (VertexSet d : deltas) {
      if (auto join = join_from(g, d, labels, ending)) {
        options.push_back({FanCase::kAvoidJoin, join->blocked(), join->p | join->q, join});
      }
    }
    // When the ending letters meet every candidate join, any wide set holding the
    // tail still certifies the fan if the interior avoids it and the ending letters.
    for (VertexSet d : deltas) options.push_back({FanCase::kAvoidWide, d | ending, d, std::nullopt});
    if (options.empty()) {
      throw ConstructionError("build_fan: no wide set covers the wide tail " + g.format(labels));
    }
  }

  std::optional<std::vector<Vertex>> path;
  for (const Option& o : options) {
    path = route(g, x, y, o.blocked, o.wide.value_or(VertexSet{}));
    if (!path) continue;
    fan.fan_case = o.kind;
    fan.blocked = o.blocked;
    fan.avoided_wide = o.wide;
    fan.join = o.join;
    break;
  }
  if (!path) {
    throw ConstructionError("build_fan: no route from " + g.name(x) + " to " + g.name(y) +
                            " avoids " + g.format(options.back().blocked));
  }
  fan.fan_edge_labels = *path;
  fan.layout(g);
  return fan;
}

FanReport check_fan(const Analysis& a, const FanDiagram& f) {
  FanReport report;
  const CoxeterGraph& g = a.graph();
  const WordEngine& engine = a.engine();
  auto flag = [&](std::string code, std::string detail) {
    report.violations.push_back({std::move(code), std::move(detail)});
  };
  const auto& labels = f.fan_edge_labels;
  if (labels.size() < 3) flag("shape", "a fan needs at least three fan edges");
  if (!engine.is_geodesic(f.base_path)) {
    flag("base", "base path is not geodesic");
    return report;
  }
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
    if (labels[i] == labels[i + 1] || !g.adjacent(labels[i], labels[i + 1])) {
      flag("cell", "fan edges " + std::to_string(i) + " and " + std::to_string(i + 1) +
                       " do not span a polygon");
    } else if (i < f.cells.size() && f.cells[i].m != g.label(labels[i], labels[i + 1])) {
      flag("cell", "cell " + std::to_string(i) + " has the wrong size");
    }
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!engine.is_geodesic(concat(f.base_path, {labels[i]}))) {
      flag("fan-geodesic", "base followed by fan edge " + std::to_string(i) + " (" + g.name(labels[i]) +
                       ") is not geodesic");
    }
  }

  const WideTail tail = wide_tail(engine, a.wide(), f.base_path);
  if (static_cast<int>(tail.suffix.size()) > a.constants().m) {
    VertexSet interior;
    for (std::size_t i = 1; i + 1 < labels.size(); ++i) interior.insert(labels[i]);
    const VertexSet tail_labels = support(tail.suffix);
    bool certified = std::any_of(a.wide().all().begin(), a.wide().all().end(), [&](VertexSet d) {
      return tail_labels.subset_of(d) && !interior.intersects(d);
    });
    if (!certified) {
      flag("tail-avoidance", "interior fan labels " + g.format(interior) +
                        " meet every wide set containing the tail labels " +
                        g.format(tail_labels));
    }
  }

  // Every directed path from the fan's apex runs along one side of a cell.
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
    if (!g.adjacent(labels[i], labels[i + 1]) || labels[i] == labels[i + 1]) continue;
    const int m = g.label(labels[i], labels[i + 1]);
    for (const Word& side : {alternating(labels[i], labels[i + 1], m),
                             alternating(labels[i + 1], labels[i], m)}) {
      if (!engine.is_geodesic(concat(f.base_path, side))) {
        flag("cell-geodesic", "side " + engine.format(side) + " of cell " + std::to_string(i) +
                                  " leaves the geodesics");
      }
    }
  }
  return report;
}

}  // namespace cox
