#include "cox/io.hpp"

#include <array>
#include <sstream>

#include "cox/error.hpp"

namespace cox {

namespace {

template <typename T>
Json optional_json(const std::optional<T>& o) {
  return o ? Json(*o) : Json(nullptr);
}

template <typename T, typename F>
Json optional_json(const std::optional<T>& o, F&& f) {
  return o ? f(*o) : Json(nullptr);
}

Json ids(const std::vector<int>& v) { return Json(v); }

template <typename E, std::size_t N>
E enum_from(const std::string& s, const std::array<E, N>& all) {
  for (E e : all) {
    if (to_string(e) == s) return e;
  }
  throw ParseError("unknown enum value '" + s + "'");
}

const std::array<VerdictCase, 7> kCases = {
    VerdictCase::kEmptyBoundaryFiniteOrWide, VerdictCase::kDisconnectedMultiEnded,
    VerdictCase::kConnectedLocallyConnected, VerdictCase::kDisconnectedNotWideAvoidant,
    VerdictCase::kTheoremAppliesA,           VerdictCase::kTheoremAppliesC,
    VerdictCase::kUnknownConjectureOpen};
const std::array<EndsKind, 4> kEnds = {EndsKind::kFiniteGroup, EndsKind::kTwoEnded,
                                       EndsKind::kOneEnded, EndsKind::kMultiEnded};
const std::array<WideKind, 2> kWide = {WideKind::kTwoInfiniteFactors, WideKind::kAffineRank3Plus};
const std::array<EdgeClass, 3> kClasses = {EdgeClass::kL, EdgeClass::kR, EdgeClass::kI};
const std::array<Boundary, 3> kBoundaries = {Boundary::kNone, Boundary::kAlpha, Boundary::kBeta};
const std::array<FanCase, 3> kFanCases = {FanCase::kShortTail, FanCase::kAvoidJoin,
                                          FanCase::kAvoidWide};

std::optional<bool> optional_bool(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<bool>();
}

void render(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(indent * 2, ' ');
  auto scalar = [](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return std::string("-");
    return v.dump();
  };
  auto flat = [&](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v) {
      if (e.is_structured()) return false;
    }
    return true;
  };
  auto flat_text = [&](const Json& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + scalar(v[i]);
    return s + "]";
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() && !v.empty()) {
        out << pad << k << ":\n";
        render(out, v, indent + 1);
      } else if (v.is_array() && !flat(v)) {
        out << pad << k << ":\n";
        render(out, v, indent + 1);
      } else if (v.is_array()) {
        out << pad << k << ": " << flat_text(v) << "\n";
      } else {
        out << pad << k << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        out << pad << "-\n";
        render(out, v, indent + 1);
      } else if (v.is_array()) {
        out << pad << "- " << (flat(v) ? flat_text(v) : v.dump()) << "\n";
      } else {
        out << pad << "- " << scalar(v) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const CoxeterGraph& g, VertexSet s) {
  Json j = Json::array();
  for (Vertex v : s) j.push_back(g.name(v));
  return j;
}

Json to_json(const CoxeterGraph& g, const Word& w) {
  Json j = Json::array();
  for (Vertex v : w) j.push_back(g.name(v));
  return j;
}

VertexSet vertex_set_from_json(const CoxeterGraph& g, const Json& j) {
  VertexSet s;
  for (const auto& e : j) s.insert(g.index_of(e.get<std::string>()));
  return s;
}

Word word_from_json(const CoxeterGraph& g, const Json& j) {
  Word w;
  for (const auto& e : j) w.push_back(g.index_of(e.get<std::string>()));
  return w;
}

Json to_json(const CoxeterGraph& g, const WideDecomposition& d) {
  return Json{{"p", to_json(g, d.p)}, {"q", to_json(g, d.q)}, {"kind", to_string(d.kind)}};
}

Json to_json(const CoxeterGraph& g, const SpecialJoin& sj) {
  return Json{{"p", to_json(g, sj.p)}, {"q", to_json(g, sj.q)}, {"k", to_json(g, sj.k)}};
}

Json to_json(const CoxeterGraph& g, const AvoidanceReport& r) {
  Json j{{"holds", r.holds}, {"witness", nullptr}};
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = Json{{"blocking", to_json(g, w.blocking)},
                        {"s", g.name(w.s)},
                        {"t", g.name(w.t)},
                        {"join", optional_json(w.join, [&](const SpecialJoin& sj) {
                           return to_json(g, sj);
                         })}};
  }
  return j;
}

Json to_json(const CoxeterGraph& g, const EndsVerdict& e) {
  return Json{{"kind", to_string(e.kind)},
              {"witness", optional_json(e.witness, [&](VertexSet s) { return to_json(g, s); })}};
}

Json to_json(const GroupConstants& c) {
  return Json{{"V", c.v}, {"M", c.m}, {"R", c.r}, {"N", c.product_region_bound()}};
}

Json to_json(const CoxeterGraph& g, const Splitting& s) {
  return Json{{"gamma1", to_json(g, s.gamma1)},
              {"delta", to_json(g, s.delta)},
              {"gamma2", to_json(g, s.gamma2)}};
}

Json to_json(const CoxeterGraph& g, const ClassificationVerdict& v) {
  const auto& h = v.hypotheses;
  Json avoidance = nullptr;
  if (v.avoidance) avoidance = to_json(g, AvoidanceReport{false, v.avoidance})["witness"];
  return Json{
      {"case", to_string(v.kind)},
      {"right_angled", v.right_angled},
      {"finite", v.finite},
      {"constants", to_json(v.constants)},
      {"ends", to_json(g, v.ends)},
      {"hypotheses",
       Json{{"affine_free", optional_json(h.affine_free)},
            {"one_ended", optional_json(h.one_ended)},
            {"wide_spherical_avoidant", optional_json(h.wide_spherical_avoidant)},
            {"wide_avoidant", optional_json(h.wide_avoidant)}}},
      {"witnesses",
       Json{{"wide", optional_json(v.wide, [&](const auto& d) { return to_json(g, d); })},
            {"separator",
             v.ends.kind == EndsKind::kMultiEnded ? to_json(g, v.ends.witness.value_or(VertexSet{}))
                                                  : Json(nullptr)},
            {"avoidance", avoidance},
            {"splitting",
             optional_json(v.splitting, [&](const auto& s) { return to_json(g, s); })}}}};
}

ClassificationVerdict verdict_from_json(const CoxeterGraph& g, const Json& j) {
  ClassificationVerdict v;
  v.kind = enum_from(j.at("case").get<std::string>(), kCases);
  v.right_angled = j.at("right_angled").get<bool>();
  v.finite = j.at("finite").get<bool>();
  const auto& c = j.at("constants");
  v.constants = {c.at("V").get<int>(), c.at("M").get<int>(), c.at("R").get<int>()};
  const auto& e = j.at("ends");
  v.ends.kind = enum_from(e.at("kind").get<std::string>(), kEnds);
  if (!e.at("witness").is_null()) v.ends.witness = vertex_set_from_json(g, e.at("witness"));
  const auto& h = j.at("hypotheses");
  v.hypotheses = {optional_bool(h.at("affine_free")), optional_bool(h.at("one_ended")),
                  optional_bool(h.at("wide_spherical_avoidant")),
                  optional_bool(h.at("wide_avoidant"))};
  const auto& w = j.at("witnesses");
  if (const auto& d = w.at("wide"); !d.is_null()) {
    v.wide = WideDecomposition{vertex_set_from_json(g, d.at("p")), vertex_set_from_json(g, d.at("q")),
                               enum_from(d.at("kind").get<std::string>(), kWide)};
  }
  if (const auto& a = w.at("avoidance"); !a.is_null()) {
    AvoidanceWitness aw{vertex_set_from_json(g, a.at("blocking")),
                        g.index_of(a.at("s").get<std::string>()),
                        g.index_of(a.at("t").get<std::string>()), std::nullopt};
    if (const auto& sj = a.at("join"); !sj.is_null()) {
      aw.join = SpecialJoin{vertex_set_from_json(g, sj.at("p")), vertex_set_from_json(g, sj.at("q")),
                            vertex_set_from_json(g, sj.at("k"))};
    }
    v.avoidance = aw;
  }
  if (const auto& s = w.at("splitting"); !s.is_null()) {
    v.splitting = Splitting{vertex_set_from_json(g, s.at("gamma1")),
                            vertex_set_from_json(g, s.at("delta")),
                            vertex_set_from_json(g, s.at("gamma2"))};
  }
  return v;
}

Json to_json(const CoxeterGraph& g, const Reflection& r) {
  return Json{{"element", to_json(g, r.element.word)}, {"type", g.name(r.type_generator)}};
}

Json to_json(const CoxeterGraph& g, const Pencil& p) {
  Json walls = Json::array();
  for (const auto& r : p.walls) walls.push_back(to_json(g, r));
  return Json{{"size", p.walls.size()}, {"edges", p.edges}, {"walls", walls}};
}

Json to_json(const CoxeterGraph& g, const WindowReport& r) {
  Json range = nullptr;
  if (r.range) range = Json::array({r.range->first, r.range->second});
  return Json{{"pass", r.pass},
              {"range", range},
              {"wide", optional_json(r.wide, [&](VertexSet s) { return to_json(g, s); })},
              {"within_proven_hypothesis", r.within_proven_hypothesis}};
}

Json to_json(const CoxeterGraph& g, const CayleyBall& b) {
  Json elements = Json::array();
  for (const auto& e : b.elements) elements.push_back(to_json(g, e.word));
  Json edges = Json::array();
  for (const auto& e : b.edges) {
    edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"label", g.name(e.label)}});
  }
  return Json{{"radius", b.radius}, {"elements", elements}, {"edges", edges}};
}

Json to_json(const CoxeterGraph& g, const FanDiagram& f) {
  Json cells = Json::array();
  for (const auto& c : f.cells) {
    cells.push_back(Json{{"left", g.name(c.left)},
                         {"right", g.name(c.right)},
                         {"m", c.m},
                         {"left_path", ids(c.left_path)},
                         {"right_path", ids(c.right_path)},
                         {"top", c.top}});
  }
  Json edges = Json::array();
  for (const auto& e : f.edges) {
    static const char* roles[] = {"fan", "left_side", "right_side"};
    edges.push_back(Json{{"id", e.id},
                         {"label", g.name(e.label)},
                         {"source", e.source},
                         {"target", e.target},
                         {"role", roles[static_cast<int>(e.role)]},
                         {"cell", e.cell},
                         {"top_left", e.top_left}});
  }
  return Json{{"base_path", to_json(g, f.base_path)},
              {"case", to_string(f.fan_case)},
              {"tail_length", f.tail_length},
              {"ending", to_json(g, f.ending)},
              {"blocked", to_json(g, f.blocked)},
              {"join", optional_json(f.join, [&](const auto& j) { return to_json(g, j); })},
              {"avoided_wide",
               optional_json(f.avoided_wide, [&](VertexSet s) { return to_json(g, s); })},
              {"fan_edge_labels", to_json(g, Word(f.fan_edge_labels))},
              {"vertex_count", f.vertex_count},
              {"cells", cells},
              {"edges", edges}};
}

Json to_json(const std::vector<Violation>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(Json{{"code", x.code}, {"detail", x.detail}});
  return j;
}

Json to_json(const FilterReport& r) {
  return Json{{"ok", r.ok()},
              {"violations", to_json(r.violations)},
              {"rooted_paths_checked", r.rooted_paths_checked},
              {"sampled_paths_checked", r.sampled_paths_checked},
              {"tree_paths_checked", r.tree_paths_checked},
              {"longest_off_boundary_path", r.longest_off_boundary_path},
              {"product_region_bound", r.product_region_bound}};
}

Json to_json(const CoxeterGraph& g, const FilterDiagram& f) {
  Json vertices = Json::array();
  int max_level = 0;
  for (const auto& v : f.vertices) {
    max_level = std::max(max_level, v.level);
    vertices.push_back(Json{{"id", v.id},
                            {"element", to_json(g, v.element.word)},
                            {"tree_path", to_json(g, v.tree_path)},
                            {"level", v.level},
                            {"top", v.top},
                            {"open", v.open},
                            {"left_out", v.left_out},
                            {"right_out", v.right_out},
                            {"fan", v.fan}});
  }
  Json edges = Json::array();
  for (const auto& e : f.edges) {
    edges.push_back(Json{{"id", e.id},
                         {"label", g.name(e.label)},
                         {"source", e.source},
                         {"target", e.target},
                         {"class", to_string(e.edge_class)},
                         {"boundary", to_string(e.boundary)},
                         {"in_tree", e.in_tree},
                         {"top_left", e.top_left}});
  }
  Json cells = Json::array();
  for (const auto& c : f.cells) {
    cells.push_back(Json{{"id", c.id},
                         {"fan", c.fan},
                         {"m", c.m},
                         {"left_path", ids(c.left_path)},
                         {"right_path", ids(c.right_path)},
                         {"boundary", ids(c.boundary)}});
  }
  Json fans = Json::array();
  for (const auto& fan : f.fans) {
    fans.push_back(Json{{"id", fan.id},
                        {"level", fan.level},
                        {"apex", fan.apex},
                        {"fan_edges", ids(fan.fan_edges)},
                        {"cells", ids(fan.cells)},
                        {"case", to_string(fan.fan_case)}});
  }
  Json levels = Json::array();
  for (int l = 0; l <= max_level; ++l) {
    Json level = Json::array();
    for (const auto& v : f.vertices) {
      if (v.level == l) level.push_back(v.id);
    }
    levels.push_back(level);
  }
  return Json{{"prefix", to_json(g, f.prefix)},
              {"alpha", to_json(g, f.alpha)},
              {"beta", to_json(g, f.beta)},
              {"depth", f.depth},
              {"vertices", vertices},
              {"edges", edges},
              {"cells", cells},
              {"fans", fans},
              {"levels", levels}};
}

FilterDiagram filter_from_json(const CoxeterGraph& g, const Json& j) {
  FilterDiagram f;
  f.prefix = word_from_json(g, j.at("prefix"));
  f.alpha = word_from_json(g, j.at("alpha"));
  f.beta = word_from_json(g, j.at("beta"));
  f.depth = j.at("depth").get<int>();
  for (const auto& v : j.at("vertices")) {
    FilterVertex x;
    x.id = v.at("id").get<int>();
    x.element.word = word_from_json(g, v.at("element"));
    x.tree_path = word_from_json(g, v.at("tree_path"));
    x.level = v.at("level").get<int>();
    x.top = v.at("top").get<bool>();
    x.open = v.at("open").get<bool>();
    x.left_out = v.at("left_out").get<int>();
    x.right_out = v.at("right_out").get<int>();
    x.fan = v.at("fan").get<int>();
    f.vertices.push_back(std::move(x));
  }
  for (const auto& e : j.at("edges")) {
    FilterEdge x;
    x.id = e.at("id").get<int>();
    x.label = g.index_of(e.at("label").get<std::string>());
    x.source = e.at("source").get<int>();
    x.target = e.at("target").get<int>();
    x.edge_class = enum_from(e.at("class").get<std::string>(), kClasses);
    x.boundary = enum_from(e.at("boundary").get<std::string>(), kBoundaries);
    x.in_tree = e.at("in_tree").get<bool>();
    x.top_left = e.at("top_left").get<bool>();
    f.edges.push_back(x);
  }
  for (const auto& c : j.at("cells")) {
    f.cells.push_back(FilterCell{c.at("id").get<int>(), c.at("fan").get<int>(), c.at("m").get<int>(),
                                 c.at("left_path").get<std::vector<int>>(),
                                 c.at("right_path").get<std::vector<int>>(),
                                 c.at("boundary").get<std::vector<int>>()});
  }
  for (const auto& x : j.at("fans")) {
    f.fans.push_back(FilterFan{x.at("id").get<int>(), x.at("level").get<int>(),
                               x.at("apex").get<int>(), x.at("fan_edges").get<std::vector<int>>(),
                               x.at("cells").get<std::vector<int>>(),
                               enum_from(x.at("case").get<std::string>(), kFanCases)});
  }
  return f;
}

Json to_json(const CoxeterGraph& g, const MultiTailFilter& m) {
  auto words = [&](const std::vector<Word>& ws) {
    Json j = Json::array();
    for (const auto& w : ws) j.push_back(to_json(g, w));
    return j;
  };
  Json trace = Json::array();
  for (const auto& s : m.case_trace) {
    trace.push_back(Json{{"k", s.k},
                         {"letter", g.name(s.letter)},
                         {"wall", to_json(g, s.wall)},
                         {"crosses_previous", s.crosses_previous},
                         {"crosses_next", s.crosses_next},
                         {"case", to_string(s.kind)}});
  }
  Json filters = Json::array();
  for (const auto& f : m.constituent_filters) filters.push_back(to_json(g, f));
  return Json{{"level", m.level},
              {"sigma", to_json(g, m.sigma)},
              {"gammas", words(m.gammas)},
              {"rays", words(m.rays)},
              {"tails", words(m.tails)},
              {"case_trace", trace},
              {"filters", filters}};
}

std::string to_dot(const CoxeterGraph& g, const FilterDiagram& f) {
  std::ostringstream out;
  out << "digraph filter {\n  rankdir=BT;\n  node [shape=point];\n";
  for (const auto& v : f.vertices) {
    std::string name;
    for (Vertex x : v.element.word) name += (name.empty() ? "" : " ") + g.name(x);
    out << "  v" << v.id << " [xlabel=" << quote(name.empty() ? "1" : name)
        << ", level=" << v.level << (v.open ? ", color=gray" : "") << "];\n";
  }
  for (const auto& e : f.edges) {
    const char* color = e.edge_class == EdgeClass::kL   ? "blue"
                        : e.edge_class == EdgeClass::kR ? "red"
                                                        : "black";
    out << "  v" << e.source << " -> v" << e.target << " [label=" << quote(g.name(e.label))
        << ", class=" << to_string(e.edge_class) << ", color=" << color
        << ", style=" << (e.in_tree ? "solid" : "dashed") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const CoxeterGraph& g, const FanDiagram& f) {
  std::ostringstream out;
  out << "digraph fan {\n  node [shape=point];\n";
  for (int v = 0; v < f.vertex_count; ++v) out << "  f" << v << ";\n";
  for (const auto& e : f.edges) {
    const char* color = e.role == FanEdgeRole::kFan ? "black"
                        : e.role == FanEdgeRole::kLeftSide ? "blue"
                                                           : "red";
    out << "  f" << e.source << " -> f" << e.target << " [label=" << quote(g.name(e.label))
        << ", color=" << color << ", style=" << (e.top_left ? "dashed" : "solid") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string pretty(const Json& j) {
  std::ostringstream out;
  render(out, j, 0);
  return out.str();
}

}  // namespace cox
