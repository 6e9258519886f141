#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cox/error.hpp"
#include "cox/io.hpp"

namespace {

using namespace cox;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  std::size_t cap = kDefaultSizeCap;
  std::size_t orbit_cap = WordEngine::kDefaultOrbitCap;
  int order_cap = kDefaultOrderCap;
  unsigned seed = 1;
  std::string format = "json";
  bool pretty_flag = false;
  int jobs = 1;
};

std::size_t default_cap() {
  if (const char* env = std::getenv("COX_CAP")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("COX_CAP is not a number: ") + env);
    }
  }
  return kDefaultSizeCap;
}

class Output {
 public:
  explicit Output(const Globals& g) : g_(g) {}

  std::string format() const { return g_.pretty_flag ? "pretty" : g_.format; }

  void emit(const Json& j) const {
    if (format() == "pretty") {
      std::cout << pretty(j);
    } else {
      std::cout << j.dump(2) << "\n";
    }
  }

  // Emits dot when requested and available, otherwise the JSON document.
  void emit(const Json& j, const std::string& dot) const {
    if (format() == "dot") {
      std::cout << dot;
    } else {
      emit(j);
    }
  }

  void require_no_dot(const std::string& what) const {
    if (format() == "dot") throw ParseError(what + " has no dot rendering");
  }

 private:
  const Globals& g_;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

AnalysisOptions analysis_options(const Globals& g) { return {g.cap, g.orbit_cap}; }

}  // namespace

int main(int argc, char** argv) {
  Globals globals;
  CLI::App app{"Coxeter group graph, word and filter toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  try {
    globals.cap = default_cap();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  app.add_option("--cap", globals.cap, "Largest accepted vertex count (env COX_CAP)");
  app.add_option("--orbit-cap", globals.orbit_cap, "Largest braid orbit explored per word");
  app.add_option("--order-cap", globals.order_cap, "Largest rotation order tried for wall crossing");
  app.add_option("--seed", globals.seed, "Seed for sampled checks");
  app.add_option("--format", globals.format, "Output format")
      ->check(CLI::IsMember({"json", "pretty", "dot"}));
  app.add_flag("--pretty", globals.pretty_flag, "Same as --format pretty");
  app.add_option("--jobs", globals.jobs, "Worker threads for subset scans")
      ->check(CLI::PositiveNumber);

  Output out(globals);
  std::string graph_path;
  int status = kOk;

  auto graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", graph_path, "Graph file (text or JSON)")->required();
  };
  auto load = [&] {
    CoxeterGraph g = load_graph(graph_path);
    check_size_cap(g, globals.cap);
    return g;
  };

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Morse boundary verdict with witnesses");
  graph_arg(classify_cmd);
  classify_cmd->callback([&] {
    out.require_no_dot("classify");
    const CoxeterGraph g = load();
    const ClassificationVerdict v = classify(g, globals.cap);
    Json j = to_json(g, v);
    const auto problems = check_verdict(g, v, globals.cap);
    if (!problems.empty()) {
      j["witness_problems"] = problems;
      status = kCheckFailed;
    }
    out.emit(j);
  });

  // check
  auto* check_cmd = app.add_subcommand("check", "Decide one graph property");
  check_cmd->require_subcommand(1);
  std::string subset_text;
  auto* check_wide = check_cmd->add_subcommand("wide", "Is the graph (or a subset) wide");
  graph_arg(check_wide);
  check_wide->add_option("--subset", subset_text, "Vertex names, space or comma separated");
  check_wide->callback([&] {
    out.require_no_dot("check");
    const CoxeterGraph g = load();
    const VertexSet s = subset_text.empty() ? g.vertices() : parse_vertex_set(g, subset_text);
    const auto d = wide_decomposition(g, s);
    out.emit(Json{{"check", "wide"},
                  {"subset", to_json(g, s)},
                  {"holds", d.has_value()},
                  {"witness", d ? to_json(g, *d) : Json(nullptr)}});
    if (!d) status = kCheckFailed;
  });
  auto avoidance_cmd = [&](const char* name, const char* help, bool spherical) {
    auto* sub = check_cmd->add_subcommand(name, help);
    graph_arg(sub);
    sub->callback([&, name, spherical] {
      out.require_no_dot("check");
      const CoxeterGraph g = load();
      const AvoidanceReport r = spherical ? is_wide_spherical_avoidant(g, globals.cap)
                                          : is_wide_avoidant(g, globals.cap);
      Json j{{"check", name}};
      j.update(to_json(g, r));
      out.emit(j);
      if (!r.holds) status = kCheckFailed;
    });
  };
  avoidance_cmd("wide-avoidant", "Every pair joined avoiding every wide subgraph", false);
  avoidance_cmd("wsa", "Every pair joined avoiding every special join", true);
  auto* check_affine = check_cmd->add_subcommand("affine-free", "No affine special subgroup of rank 3 or more");
  graph_arg(check_affine);
  check_affine->callback([&] {
    out.require_no_dot("check");
    const CoxeterGraph g = load();
    const bool holds = is_affine_free(g, globals.cap);
    out.emit(Json{{"check", "affine-free"}, {"holds", holds}});
    if (!holds) status = kCheckFailed;
  });
  auto* check_ends = check_cmd->add_subcommand("ends", "Number of ends with separator witness");
  graph_arg(check_ends);
  check_ends->callback([&] {
    out.require_no_dot("check");
    const CoxeterGraph g = load();
    Json j{{"check", "ends"}};
    j.update(to_json(g, ends_verdict(g)));
    out.emit(j);
  });

  // word
  auto* word_cmd = app.add_subcommand("word", "Word problem utilities");
  word_cmd->require_subcommand(1);
  std::string word_text;
  std::size_t target_length = 0;
  auto word_sub = [&](const char* name, const char* help, auto body) {
    auto* sub = word_cmd->add_subcommand(name, help);
    graph_arg(sub);
    sub->add_option("word", word_text, "Space separated generator names")->required();
    sub->callback([&, body] {
      out.require_no_dot("word");
      const CoxeterGraph g = load();
      WordEngine engine(g, globals.orbit_cap);
      body(g, engine, engine.parse(word_text));
    });
    return sub;
  };
  word_sub("normalize", "Canonical reduced expression", [&](const CoxeterGraph& g, const WordEngine& e, const Word& w) {
    const GroupElement x = e.normalize(w);
    out.emit(Json{{"word", to_json(g, w)}, {"normal_form", to_json(g, x.word)}, {"length", x.length()}});
  });
  word_sub("geodesic", "Is the word reduced", [&](const CoxeterGraph& g, const WordEngine& e, const Word& w) {
    const bool geo = e.is_geodesic(w);
    out.emit(Json{{"word", to_json(g, w)}, {"geodesic", geo}});
    if (!geo) status = kCheckFailed;
  });
  word_sub("ending-letters", "Letters a reduced expression may end with",
           [&](const CoxeterGraph& g, const WordEngine& e, const Word& w) {
             const VertexSet s = e.ending_letters(e.normalize(w));
             out.emit(Json{{"word", to_json(g, w)}, {"ending_letters", to_json(g, s)}});
           });
  word_sub("wide-tail", "Longest suffix with wide label", [&](const CoxeterGraph& g, const WordEngine& e, const Word& w) {
    if (!e.is_geodesic(w)) throw PreconditionError("wide-tail: the word is not geodesic");
    const WideIndex wide(g, globals.cap);
    const WideTail t = wide_tail(e, wide, w);
    out.emit(Json{{"word", to_json(g, w)},
                  {"tail", to_json(g, t.suffix)},
                  {"tail_length", t.suffix.size()},
                  {"delta", t.delta ? to_json(g, *t.delta) : Json(nullptr)}});
  });
  auto* extend_cmd = word_sub("extend", "Extend a geodesic while avoiding long wide windows",
                              [&](const CoxeterGraph& g, const WordEngine&, const Word& w) {
                                const Extension x = extend_geodesic(g, w, target_length);
                                out.emit(Json{{"word", to_json(g, w)},
                                              {"extension", to_json(g, x.word)},
                                              {"appended_from", x.appended_from},
                                              {"window", x.window}});
                              });
  extend_cmd->add_option("--length", target_length, "Target length")->required();

  // ball
  int radius = 2;
  std::size_t ball_cap = 100000;
  auto* ball_cmd = app.add_subcommand("ball", "Ball in the Cayley graph");
  graph_arg(ball_cmd);
  ball_cmd->add_option("--radius", radius, "Radius")->check(CLI::NonNegativeNumber);
  ball_cmd->add_option("--max-elements", ball_cap, "Element cap");
  ball_cmd->callback([&] {
    const CoxeterGraph g = load();
    WordEngine engine(g, globals.orbit_cap);
    const CayleyBall b = build_ball(engine, radius, ball_cap);
    out.emit(to_json(g, b), to_dot(b, engine));
  });

  // pencil
  auto* pencil_cmd = app.add_subcommand("pencil", "Largest pencil of walls crossed by a geodesic");
  graph_arg(pencil_cmd);
  pencil_cmd->add_option("word", word_text, "Geodesic word")->required();
  pencil_cmd->callback([&] {
    out.require_no_dot("pencil");
    const CoxeterGraph g = load();
    WordEngine engine(g, globals.orbit_cap);
    const Word w = engine.parse(word_text);
    const Pencil p = find_pencil(engine, w, globals.order_cap);
    Json j = to_json(g, p);
    const auto problems = verify_pencil(engine, w, p, globals.order_cap);
    j["problems"] = problems;
    out.emit(j);
    if (!problems.empty()) status = kCheckFailed;
  });

  // morse-window
  std::size_t window = 0;
  auto* morse_cmd = app.add_subcommand("morse-window", "Window criterion for Morse geodesics");
  graph_arg(morse_cmd);
  morse_cmd->add_option("word", word_text, "Geodesic word")->required();
  morse_cmd->add_option("-k,--window", window, "Window length")->required();
  morse_cmd->callback([&] {
    out.require_no_dot("morse-window");
    const CoxeterGraph g = load();
    WordEngine engine(g, globals.orbit_cap);
    const WideIndex wide(g, globals.cap);
    const WindowReport r =
        morse_window_check(engine, wide, engine.parse(word_text), window, is_affine_free(g, globals.cap));
    out.emit(to_json(g, r));
    if (!r.pass) status = kCheckFailed;
  });

  // fan
  std::string base_text, x_name, y_name;
  auto* fan_cmd = app.add_subcommand("fan", "Fan over a geodesic base path");
  graph_arg(fan_cmd);
  fan_cmd->add_option("--base", base_text, "Geodesic base path")->required();
  fan_cmd->add_option("--x", x_name, "First letter")->required();
  fan_cmd->add_option("--y", y_name, "Last letter")->required();
  fan_cmd->callback([&] {
    const CoxeterGraph g = load();
    const Analysis a(g, analysis_options(globals));
    const FanDiagram f = build_fan(a, a.engine().parse(base_text), g.index_of(x_name), g.index_of(y_name));
    const FanReport r = check_fan(a, f);
    Json j{{"fan", to_json(g, f)}, {"ok", r.ok()}, {"violations", to_json(r.violations)}};
    out.emit(j, to_dot(g, f));
    if (!r.ok()) status = kCheckFailed;
  });

  // filter
  std::string alpha_text, beta_text, prefix_text, out_path, dot_path;
  int depth = 2;
  FilterCheckOptions filter_options;
  long long n_override = 0;
  auto* filter_cmd = app.add_subcommand("filter", "Filter between two geodesic rays, with invariant report");
  graph_arg(filter_cmd);
  filter_cmd->add_option("--alpha", alpha_text, "Left ray")->required();
  filter_cmd->add_option("--beta", beta_text, "Right ray")->required();
  filter_cmd->add_option("--depth", depth, "Number of fan levels")->check(CLI::NonNegativeNumber);
  filter_cmd->add_option("--prefix", prefix_text, "Path from the identity to the basepoint");
  filter_cmd->add_option("--out", out_path, "Write the filter JSON here");
  filter_cmd->add_option("--dot", dot_path, "Write the filter DOT here");
  filter_cmd->add_option("--exhaustive-length", filter_options.exhaustive_length,
                         "Rooted paths up to this length are checked exhaustively");
  filter_cmd->add_option("--samples", filter_options.sampled_paths, "Sampled longer paths");
  filter_cmd->add_option("--product-bound", n_override, "Override the product-region bound N");
  filter_cmd->callback([&] {
    const CoxeterGraph g = load();
    const Analysis a(g, analysis_options(globals));
    const WordEngine& e = a.engine();
    const FilterDiagram f =
        build_filter(a, e.parse(alpha_text), e.parse(beta_text), depth, e.parse(prefix_text));
    filter_options.seed = globals.seed;
    if (n_override > 0) filter_options.product_region_bound = n_override;
    const FilterReport r = check_filter(a, f, filter_options);
    if (!out_path.empty()) write_file(out_path, to_json(g, f).dump(2) + "\n");
    if (!dot_path.empty()) write_file(dot_path, to_dot(g, f));
    Json j{{"vertices", f.vertices.size()}, {"edges", f.edges.size()}, {"cells", f.cells.size()},
           {"fans", f.fans.size()}};
    j.update(to_json(r));
    out.emit(j, to_dot(g, f));
    if (!r.ok()) status = kCheckFailed;
  });

  // mtf
  std::size_t level = 1;
  auto* mtf_cmd = app.add_subcommand("mtf", "Multi-tail filter at level n");
  graph_arg(mtf_cmd);
  mtf_cmd->add_option("--alpha", alpha_text, "Left ray")->required();
  mtf_cmd->add_option("--beta", beta_text, "Right ray")->required();
  mtf_cmd->add_option("-n,--level", level, "Level n")->required();
  mtf_cmd->add_option("--depth", depth, "Fan levels of each constituent filter");
  mtf_cmd->add_option("--out", out_path, "Write the full JSON here");
  mtf_cmd->callback([&] {
    out.require_no_dot("mtf");
    const CoxeterGraph g = load();
    const Analysis a(g, analysis_options(globals));
    const WordEngine& e = a.engine();
    MultiTailOptions options;
    options.depth = depth;
    const MultiTailFilter m = build_multitail_filter(a, e.parse(alpha_text), e.parse(beta_text), level, options);
    Json j = to_json(g, m);
    if (!out_path.empty()) write_file(out_path, j.dump(2) + "\n");
    Json reports = Json::array();
    bool ok = true;
    filter_options.seed = globals.seed;
    for (const auto& f : m.constituent_filters) {
      const FilterReport r = check_filter(a, f, filter_options);
      ok = ok && r.ok();
      reports.push_back(to_json(r));
    }
    j.erase("filters");
    j["filter_reports"] = reports;
    out.emit(j);
    if (!ok) status = kCheckFailed;
  });

  // constants
  auto* constants_cmd = app.add_subcommand("constants", "The constants V, M, R and the bound N");
  graph_arg(constants_cmd);
  constants_cmd->callback([&] {
    out.require_no_dot("constants");
    const CoxeterGraph g = load();
    out.emit(to_json(compute_constants(g)));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return status;
}
