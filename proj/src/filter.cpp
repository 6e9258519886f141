#include "cox/filter.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace cox {

std::string to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::kL: return "L";
    case EdgeClass::kR: return "R";
    case EdgeClass::kI: return "I";
  }
  return "?";
}

std::string to_string(Boundary b) {
  switch (b) {
    case Boundary::kNone: return "none";
    case Boundary::kAlpha: return "alpha";
    case Boundary::kBeta: return "beta";
  }
  return "?";
}

namespace {

class FilterBuilder {
 public:
  FilterBuilder(const Analysis& a, FilterDiagram& f) : a_(a), f_(f) {}

  int add_root() {
    FilterVertex v;
    v.element = a_.engine().normalize(f_.prefix);
    f_.vertices.push_back(std::move(v));
    return 0;
  }

  // New vertex reached from `from` by a spanning-tree edge.
  int grow(int from, Vertex label, EdgeClass cls, Boundary b, int level) {
    FilterVertex v;
    v.id = static_cast<int>(f_.vertices.size());
    v.level = level;
    v.tree_path = f_.vertices[from].tree_path;
    v.tree_path.push_back(label);
    v.element = a_.engine().append(f_.vertices[from].element, label);
    f_.vertices.push_back(std::move(v));
    connect(from, f_.vertices.back().id, label, cls, b);
    return f_.vertices.back().id;
  }

  int connect(int from, int to, Vertex label, EdgeClass cls, Boundary b) {
    FilterEdge e;
    e.id = static_cast<int>(f_.edges.size());
    e.label = label;
    e.source = from;
    e.target = to;
    e.edge_class = cls;
    e.boundary = b;
    f_.edges.push_back(e);
    return e.id;
  }

  void set_slot(int vertex, bool left, int edge) {
    int& slot = left ? f_.vertices[vertex].left_out : f_.vertices[vertex].right_out;
    if (slot != -1) {
      throw ConstructionError("filter: vertex " + std::to_string(vertex) + " would get two " +
                              (left ? "left" : "right") + " outgoing edges");
    }
    slot = edge;
  }

  void ray(const Word& w, bool left) {
    int at = 0;
    for (Vertex s : w) {
      int next = grow(at, s, left ? EdgeClass::kL : EdgeClass::kR,
                      left ? Boundary::kAlpha : Boundary::kBeta, 0);
      set_slot(at, left, static_cast<int>(f_.edges.size()) - 1);
      at = next;
    }
  }

  // Builds the fan at u; returns endpoints of its fan edges, left to right.
  std::vector<int> fan_at(int u, int level) {
    FilterVertex& apex = f_.vertices[u];
    const Vertex x = f_.edges[apex.left_out].label;
    const Vertex y = f_.edges[apex.right_out].label;
    FanDiagram fan;
    try {
      fan = build_fan(a_, concat(f_.prefix, apex.tree_path), x, y);
    } catch (const Error& e) {
      throw ConstructionError("level " + std::to_string(level) + " fan at vertex " +
                              std::to_string(u) + ": " + e.what());
    }
    FilterFan out;
    out.id = static_cast<int>(f_.fans.size());
    out.level = level;
    out.apex = u;
    out.fan_case = fan.fan_case;
    f_.vertices[u].fan = out.id;

    const auto& labels = fan.fan_edge_labels;
    out.fan_edges.push_back(f_.vertices[u].left_out);
    for (std::size_t i = 1; i + 1 < labels.size(); ++i) {
      grow(u, labels[i], EdgeClass::kI, Boundary::kNone, level);
      out.fan_edges.push_back(static_cast<int>(f_.edges.size()) - 1);
    }
    out.fan_edges.push_back(f_.vertices[u].right_out);

    for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
      const Vertex left = labels[i];
      const Vertex right = labels[i + 1];
      const int m = a_.graph().label(left, right);
      FilterCell cell;
      cell.id = static_cast<int>(f_.cells.size());
      cell.fan = out.id;
      cell.m = m;
      cell.left_path.push_back(out.fan_edges[i]);
      cell.right_path.push_back(out.fan_edges[i + 1]);
      const Word lambda = alternating(left, right, m);
      const Word rho = alternating(right, left, m);

      // The right side reaches the top vertex through the tree.
      int at = f_.edges[out.fan_edges[i + 1]].target;
      for (int k = 1; k < m; ++k) {
        int next = grow(at, rho[k], EdgeClass::kL, Boundary::kNone, level);
        set_slot(at, true, static_cast<int>(f_.edges.size()) - 1);
        cell.right_path.push_back(static_cast<int>(f_.edges.size()) - 1);
        at = next;
      }
      const int top = at;
      f_.vertices[top].top = true;

      at = f_.edges[out.fan_edges[i]].target;
      for (int k = 1; k < m; ++k) {
        int edge;
        int next;
        if (k == m - 1) {
          edge = connect(at, top, lambda[k], EdgeClass::kR, Boundary::kNone);
          f_.edges[edge].in_tree = false;
          f_.edges[edge].top_left = true;
          next = top;
        } else {
          next = grow(at, lambda[k], EdgeClass::kR, Boundary::kNone, level);
          edge = static_cast<int>(f_.edges.size()) - 1;
        }
        set_slot(at, false, edge);
        cell.left_path.push_back(edge);
        at = next;
      }

      cell.boundary.push_back(u);
      for (int e : cell.left_path) cell.boundary.push_back(f_.edges[e].target);
      for (auto it = cell.right_path.rbegin(); it != cell.right_path.rend(); ++it) {
        if (f_.edges[*it].source != u) cell.boundary.push_back(f_.edges[*it].source);
      }
      out.cells.push_back(cell.id);
      f_.cells.push_back(std::move(cell));
    }
    std::vector<int> ends;
    for (int e : out.fan_edges) ends.push_back(f_.edges[e].target);
    f_.fans.push_back(std::move(out));
    return ends;
  }

 private:
  const Analysis& a_;
  FilterDiagram& f_;
};

}  // namespace

FilterDiagram build_filter(const Analysis& a, const Word& alpha, const Word& beta, int depth,
                           const Word& prefix) {
  a.require_fan_hypotheses("build_filter");
  if (depth < 0) throw PreconditionError("build_filter: negative depth");
  const WordEngine& engine = a.engine();
  if (!engine.is_geodesic(concat(prefix, alpha))) {
    throw PreconditionError("build_filter: alpha is not geodesic from the basepoint");
  }
  if (!engine.is_geodesic(concat(prefix, beta))) {
    throw PreconditionError("build_filter: beta is not geodesic from the basepoint");
  }
  FilterDiagram f;
  f.prefix = prefix;
  f.alpha = alpha;
  f.beta = beta;
  f.depth = depth;
  FilterBuilder b(a, f);
  b.add_root();
  b.ray(alpha, true);
  b.ray(beta, false);

  std::vector<int> frontier{0};
  std::vector<char> scheduled(1, 1);
  for (int level = 1; level <= depth; ++level) {
    std::vector<int> next;
    for (int u : frontier) {
      const FilterVertex& v = f.vertices[u];
      if (v.left_out < 0 || v.right_out < 0) continue;  // a boundary ray ran out
      for (int w : b.fan_at(u, level)) {
        if (static_cast<std::size_t>(w) >= scheduled.size()) scheduled.resize(f.vertices.size(), 0);
        if (!scheduled[w]) {
          scheduled[w] = 1;
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  for (auto& v : f.vertices) v.open = v.fan < 0;
  return f;
}

namespace {

struct CheckContext {
  const Analysis& a;
  const FilterDiagram& f;
  FilterReport& report;
  std::vector<std::vector<int>> out;       // all outgoing edges
  std::vector<std::vector<int>> tree_out;  // outgoing spanning-tree edges
  std::unordered_map<std::uint64_t, bool> wide_cache;
  std::unordered_map<std::string, std::size_t> per_code;

  void flag(const std::string& code, std::string detail) {
    // Keep reports readable when one defect repeats along many paths.
    if (per_code[code]++ < 20) report.violations.push_back({code, std::move(detail)});
    else if (per_code[code] == 21) report.violations.push_back({code, "further violations elided"});
  }

  bool wide_label(VertexSet labels) {
    auto [it, fresh] = wide_cache.try_emplace(labels.bits(), false);
    if (fresh) it->second = a.wide().contained(labels);
    return it->second;
  }

  std::string path_text(const std::vector<int>& edges) const {
    std::string s = "edges";
    for (int e : edges) s += " " + std::to_string(e);
    return s;
  }
};

void check_tree(CheckContext& c) {
  const auto& f = c.f;
  std::size_t tree_edges = 0;
  for (const auto& e : f.edges) tree_edges += e.in_tree ? 1 : 0;
  if (tree_edges + 1 != f.vertices.size()) {
    c.flag("tree", std::to_string(tree_edges) + " tree edges for " +
                       std::to_string(f.vertices.size()) + " vertices");
  }
  std::vector<char> seen(f.vertices.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : c.tree_out[v]) {
      int w = f.edges[e].target;
      if (seen[w]) {
        c.flag("tree", "vertex " + std::to_string(w) + " reached twice through the tree");
        continue;
      }
      seen[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  if (reached != f.vertices.size()) {
    c.flag("tree", "tree reaches " + std::to_string(reached) + " of " +
                       std::to_string(f.vertices.size()) + " vertices");
  }
  for (const auto& e : f.edges) {
    if (e.top_left == e.in_tree) {
      c.flag("tree", "edge " + std::to_string(e.id) + " breaks the top-left rule");
    }
  }
}

void check_incoming(CheckContext& c) {
  std::vector<int> incoming(c.f.vertices.size(), 0);
  for (const auto& e : c.f.edges) ++incoming[e.target];
  for (const auto& v : c.f.vertices) {
    int expected = v.id == 0 ? 0 : (v.top ? 2 : 1);
    if (incoming[v.id] != expected) {
      c.flag("incoming", "vertex " + std::to_string(v.id) + " has " +
                             std::to_string(incoming[v.id]) + " incoming edges, expected " +
                             std::to_string(expected));
    }
  }
}

void check_geodesy(CheckContext& c, const FilterCheckOptions& options) {
  const WordEngine& engine = c.a.engine();
  const auto& f = c.f;
  std::vector<int> path;
  auto dfs = [&](auto&& self, int v, const GroupElement& g) -> void {
    for (int e : c.out[v]) {
      GroupElement next = engine.append(g, f.edges[e].label);
      path.push_back(e);
      ++c.report.rooted_paths_checked;
      if (next.length() != g.length() + 1) {
        c.flag("geodesic", "rooted path " + c.path_text(path) + " is not geodesic");
      } else if (path.size() < options.exhaustive_length) {
        self(self, f.edges[e].target, next);
      }
      path.pop_back();
    }
  };
  dfs(dfs, 0, f.vertices[0].element);

  std::mt19937 rng(options.seed);
  for (std::size_t i = 0; i < options.sampled_paths; ++i) {
    int v = 0;
    GroupElement g = f.vertices[0].element;
    path.clear();
    while (!c.out[v].empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, c.out[v].size() - 1);
      int e = c.out[v][pick(rng)];
      GroupElement next = engine.append(g, f.edges[e].label);
      path.push_back(e);
      if (next.length() != g.length() + 1) {
        c.flag("geodesic", "sampled path " + c.path_text(path) + " is not geodesic");
        break;
      }
      g = std::move(next);
      v = f.edges[e].target;
    }
    ++c.report.sampled_paths_checked;
  }
}

void check_itineraries(CheckContext& c, long long n_bound) {
  const auto& f = c.f;
  const auto& k = c.a.constants();
  const long long few = static_cast<long long>(k.m) + k.v + 1;
  const long long l_run = static_cast<long long>(k.r) * (few + 1);
  const long long r_run = k.r;

  struct State {
    VertexSet labels;
    long long length = 0;
    long long internal = 0;
    long long lr = 0;
    bool all_l = true;
    bool all_r = true;
    bool off_boundary = true;
    EdgeClass last = EdgeClass::kI;
  };
  std::vector<int> path;
  auto dfs = [&](auto&& self, int v, const State& s) -> void {
    for (int e : c.tree_out[v]) {
      const FilterEdge& edge = f.edges[e];
      State t = s;
      t.labels.insert(edge.label);
      ++t.length;
      if (edge.edge_class == EdgeClass::kI) ++t.internal;
      if (s.length > 0 && s.last == EdgeClass::kL && edge.edge_class == EdgeClass::kR) ++t.lr;
      t.all_l = s.all_l && edge.edge_class == EdgeClass::kL;
      t.all_r = s.all_r && edge.edge_class == EdgeClass::kR;
      t.off_boundary = s.off_boundary && edge.boundary == Boundary::kNone;
      t.last = edge.edge_class;
      path.push_back(e);
      ++c.report.tree_paths_checked;
      if (t.off_boundary) {
        c.report.longest_off_boundary_path =
            std::max<std::size_t>(c.report.longest_off_boundary_path, static_cast<std::size_t>(t.length));
      }

      if (t.off_boundary && t.all_r && t.length > r_run) {
        c.flag("r-run", "R-path " + c.path_text(path) + " is longer than " + std::to_string(r_run));
      }
      const bool needs_label = t.internal >= few || t.lr >= few ||
                               (t.off_boundary && t.all_l && t.length >= l_run) ||
                               (t.off_boundary && t.length > n_bound);
      if (needs_label && c.wide_label(t.labels)) {
        if (t.internal >= few) {
          c.flag("internal-edges", "tree path " + c.path_text(path) + " has " +
                                       std::to_string(t.internal) + " I-edges and wide label");
        }
        if (t.lr >= few) {
          c.flag("lr-subpaths", "tree path " + c.path_text(path) + " has " +
                                    std::to_string(t.lr) + " LR-subpaths and wide label");
        }
        if (t.off_boundary && t.all_l && t.length >= l_run) {
          c.flag("l-run", "L-path " + c.path_text(path) + " of length " +
                              std::to_string(t.length) + " has wide label");
        }
        if (t.off_boundary && t.length > n_bound) {
          c.flag("product-region", "tree path " + c.path_text(path) + " longer than " +
                                       std::to_string(n_bound) + " has wide label");
        }
      }
      self(self, edge.target, t);
      path.pop_back();
    }
  };
  for (const auto& v : f.vertices) dfs(dfs, v.id, State{});
}

}  // namespace

FilterReport check_filter(const Analysis& a, const FilterDiagram& f,
                          const FilterCheckOptions& options) {
  FilterReport report;
  report.product_region_bound =
      options.product_region_bound.value_or(a.constants().product_region_bound());
  CheckContext c{a, f, report, {}, {}, {}, {}};
  c.out.assign(f.vertices.size(), {});
  c.tree_out.assign(f.vertices.size(), {});
  for (const auto& e : f.edges) {
    c.out[e.source].push_back(e.id);
    if (e.in_tree) c.tree_out[e.source].push_back(e.id);
  }
  check_tree(c);
  check_incoming(c);
  // The remaining scans assume a tree; a broken one would make them loop.
  if (!report.ok()) return report;
  check_geodesy(c, options);
  check_itineraries(c, report.product_region_bound);
  return report;
}

}  // namespace cox
