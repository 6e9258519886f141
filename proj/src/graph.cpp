#include "cox/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cox {

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

bool set_order_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Equal sizes: the set whose first differing member is smaller comes first.
  std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() >> std::countr_zero(diff)) & 1U;
}

CoxeterGraph::CoxeterGraph(std::vector<std::string> names, const std::vector<Edge>& edges)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  if (n > kMaxVertices) throw PreconditionError("graphs are limited to 64 vertices");
  labels_.assign(n * n, kNoEdge);
  adjacent_.assign(n, VertexSet{});
  commuting_.assign(n, VertexSet{});
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw ParseError("edge refers to an unknown vertex");
    if (e.u == e.v) throw ParseError("self-loop at " + names_[e.u]);
    if (e.label < 2) {
      throw ParseError("label below 2 on edge " + names_[e.u] + " " + names_[e.v]);
    }
    if (e.label > 0xffff) throw ParseError("label too large");
    auto& cur = labels_[e.u * n + e.v];
    if (cur != kNoEdge && cur != e.label) {
      throw ParseError("conflicting duplicate edge " + names_[e.u] + " " + names_[e.v]);
    }
    cur = static_cast<std::uint16_t>(e.label);
    labels_[e.v * n + e.u] = cur;
    adjacent_[e.u].insert(e.v);
    adjacent_[e.v].insert(e.u);
    if (e.label == 2) {
      commuting_[e.u].insert(e.v);
      commuting_[e.v].insert(e.u);
    }
  }
}

std::optional<Vertex> CoxeterGraph::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Vertex>(i);
  }
  return std::nullopt;
}

Vertex CoxeterGraph::index_of(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw ParseError("unknown vertex '" + std::string(name) + "'");
}

VertexSet CoxeterGraph::common_neighbors(VertexSet s) const {
  VertexSet out = vertices();
  for (Vertex v : s) out &= adjacent_[v];
  return out - s;
}

std::vector<Edge> CoxeterGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v = u + 1; v < size(); ++v) {
      int m = label(static_cast<Vertex>(u), static_cast<Vertex>(v));
      if (m != kNoEdge) out.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), m});
    }
  }
  return out;
}

int CoxeterGraph::max_label() const {
  int best = 2;
  for (auto m : labels_) best = std::max<int>(best, m);
  return best;
}

bool CoxeterGraph::right_angled() const {
  return std::all_of(labels_.begin(), labels_.end(),
                     [](auto m) { return m == kNoEdge || m == 2; });
}

CoxeterGraph CoxeterGraph::induced(VertexSet s) const {
  std::vector<std::string> names;
  std::vector<int> index(size(), -1);
  for (Vertex v : s) {
    index[v] = static_cast<int>(names.size());
    names.push_back(names_[v]);
  }
  std::vector<Edge> sub;
  for (const Edge& e : edges()) {
    if (s.contains(e.u) && s.contains(e.v)) {
      sub.push_back({static_cast<Vertex>(index[e.u]), static_cast<Vertex>(index[e.v]), e.label});
    }
  }
  return CoxeterGraph(std::move(names), sub);
}

namespace {

template <typename Neighbours>
std::vector<VertexSet> components_of(VertexSet s, Neighbours&& nbrs) {
  std::vector<VertexSet> out;
  VertexSet rest = s;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.least());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= nbrs(v);
      next = (next & s) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

}  // namespace

std::vector<VertexSet> CoxeterGraph::connected_components(VertexSet s) const {
  return components_of(s, [this](Vertex v) { return adjacent_[v]; });
}

std::vector<VertexSet> irreducible_components(const CoxeterGraph& g, VertexSet s) {
  const VertexSet all = g.vertices();
  return components_of(s, [&](Vertex v) { return all - g.commuting(v) - VertexSet::single(v); });
}

std::string CoxeterGraph::format(VertexSet s) const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ", ";
    out += names_[v];
    first = false;
  }
  return out + "}";
}

namespace {

int parse_label(const std::string& tok, int line) {
  std::size_t used = 0;
  int m = 0;
  try {
    m = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty()) {
    throw ParseError("line " + std::to_string(line) + ": label '" + tok + "' is not an integer");
  }
  if (m < 2) throw ParseError("line " + std::to_string(line) + ": label below 2");
  return m;
}

struct Builder {
  std::vector<std::string> names;
  std::vector<Edge> edges;

  Vertex lookup(const std::string& name, int line) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return static_cast<Vertex>(i);
    }
    throw ParseError("line " + std::to_string(line) + ": unknown vertex '" + name + "'");
  }
  void add_vertex(const std::string& name, int line) {
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      throw ParseError("line " + std::to_string(line) + ": duplicate vertex '" + name + "'");
    }
    if (names.size() == kMaxVertices) throw ParseError("more than 64 vertices");
    names.push_back(name);
  }
  void add_edge(const std::string& a, const std::string& b, int m, int line) {
    edges.push_back({lookup(a, line), lookup(b, line), m});
  }
  CoxeterGraph finish() { return CoxeterGraph(std::move(names), edges); }
};

CoxeterGraph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  Builder b;
  try {
    for (const auto& v : doc.at("vertices")) b.add_vertex(v.get<std::string>(), 0);
    if (doc.contains("edges")) {
      for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 3) throw ParseError("edge entries must be [u, v, m]");
        int m = e[2].get<int>();
        if (m < 2) throw ParseError("label below 2");
        b.add_edge(e[0].get<std::string>(), e[1].get<std::string>(), m, 0);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  }
  return b.finish();
}

}  // namespace

CoxeterGraph parse_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);

  Builder b;
  int line = 1;
  std::string stmt;
  auto flush = [&] {
    std::istringstream in(stmt);
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    stmt.clear();
    if (tok.empty()) return;
    if (tok[0] == "v" && tok.size() >= 2) {
      for (std::size_t i = 1; i < tok.size(); ++i) b.add_vertex(tok[i], line);
    } else if (tok[0] == "e" && tok.size() == 4) {
      b.add_edge(tok[1], tok[2], parse_label(tok[3], line), line);
    } else {
      throw ParseError("line " + std::to_string(line) + ": cannot parse '" + in.str() + "'");
    }
  };
  bool comment = false;
  for (char c : text) {
    if (c == '\n') {
      flush();
      comment = false;
      ++line;
    } else if (comment) {
      continue;
    } else if (c == '#') {
      comment = true;
    } else if (c == ';') {
      flush();
    } else {
      stmt += c;
    }
  }
  flush();
  return b.finish();
}

CoxeterGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize(const CoxeterGraph& g) {
  std::string out;
  for (const auto& n : g.names()) out += "v " + n + "\n";
  for (const Edge& e : g.edges()) {
    out += "e " + g.name(e.u) + " " + g.name(e.v) + " " + std::to_string(e.label) + "\n";
  }
  return out;
}

VertexSet parse_vertex_set(const CoxeterGraph& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  VertexSet out;
  for (std::string t; in >> t;) {
    for (auto& c : t) {
      if (c == ',' || c == '{' || c == '}') c = ' ';
    }
    std::istringstream inner(t);
    for (std::string name; inner >> name;) out.insert(g.index_of(name));
  }
  return out;
}

}  // namespace cox
