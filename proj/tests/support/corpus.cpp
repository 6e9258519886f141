#include "corpus.hpp"

#include <stdexcept>

namespace cox::test {

CoxeterGraph graph(const std::string& text) { return parse_graph(text); }

CoxeterGraph diagram(const std::string& text) {
  const CoxeterGraph g = parse_graph(text);
  std::vector<Edge> edges = g.edges();
  for (Vertex a = 0; a < g.size(); ++a) {
    for (Vertex b = a + 1; b < g.size(); ++b) {
      if (!g.adjacent(a, b)) edges.push_back({a, b, 2});
    }
  }
  return CoxeterGraph(g.names(), edges);
}

CoxeterGraph p3() { return graph("v a b c; e a b 2; e b c 2"); }

CoxeterGraph c4() {
  return graph("v s1 s2 s3 s4; e s1 s2 2; e s2 s3 2; e s3 s4 2; e s4 s1 2");
}

CoxeterGraph c5() {
  return graph("v v1 v2 v3 v4 v5; e v1 v2 2; e v2 v3 2; e v3 v4 2; e v4 v5 2; e v5 v1 2");
}

CoxeterGraph g6() {
  return graph(
      "v s1 s2 s3 s4 a b; e s1 s2 2; e s2 s3 2; e s3 s4 2; e s4 s1 2;"
      "e a s1 2; e a s2 2; e a s3 2; e b s2 2; e b s3 2; e b s4 2");
}

CoxeterGraph triangle333() { return graph("v a b c; e a b 3; e b c 3; e c a 3"); }

CoxeterGraph triangle244() { return graph("v a b c; e a b 2; e b c 4; e c a 4"); }

CoxeterGraph c4_apex2() {
  return graph("v s1 s2 s3 s4 a; e s1 s2 2; e s2 s3 2; e s3 s4 2; e s4 s1 2; e a s1 2; e a s3 2");
}

CoxeterGraph c4_apex3() {
  return graph("v s1 s2 s3 s4 a; e s1 s2 2; e s2 s3 2; e s3 s4 2; e s4 s1 2; e a s1 3");
}

CoxeterGraph cube() {
  std::string text = "v c0 c1 c2 c3 c4 c5 c6 c7";
  for (int i = 0; i < 8; ++i) {
    for (int bit = 1; bit < 8; bit <<= 1) {
      const int j = i ^ bit;
      if (i < j) text += "; e c" + std::to_string(i) + " c" + std::to_string(j) + " 2";
    }
  }
  return graph(text);
}

CoxeterGraph c5_one3() {
  return graph("v v1 v2 v3 v4 v5; e v1 v2 3; e v2 v3 2; e v3 v4 2; e v4 v5 2; e v5 v1 2");
}

CoxeterGraph prism() {
  return graph(
      "v a1 a2 a3 b1 b2 b3; e a1 a2 2; e a2 a3 2; e a3 a1 2; e b1 b2 2; e b2 b3 2; e b3 b1 2;"
      "e a1 b1 2; e a2 b2 2; e a3 b3 2");
}

namespace {

CoxeterGraph path(const std::vector<int>& labels) {
  std::string text = "v";
  for (std::size_t i = 0; i <= labels.size(); ++i) text += " x" + std::to_string(i + 1);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    text += "; e x" + std::to_string(i + 1) + " x" + std::to_string(i + 2) + " " +
            std::to_string(labels[i]);
  }
  return diagram(text);
}

}  // namespace

CoxeterGraph finite_type(const std::string& name) {
  if (name.starts_with("I2(")) return path({std::stoi(name.substr(3))});
  const int n = std::stoi(name.substr(1));
  switch (name[0]) {
    case 'A':
      return path(std::vector<int>(n - 1, 3));
    case 'B': {
      std::vector<int> l(n - 1, 3);
      l.back() = 4;
      return path(l);
    }
    case 'D': {
      std::string text = "v";
      for (int i = 1; i <= n - 1; ++i) text += " x" + std::to_string(i);
      text += " y";
      for (int i = 1; i < n - 1; ++i) {
        text += "; e x" + std::to_string(i) + " x" + std::to_string(i + 1) + " 3";
      }
      text += "; e x" + std::to_string(n - 2) + " y 3";
      return diagram(text);
    }
    case 'H':
      if (n == 3) return path({5, 3});
      if (n == 4) return path({5, 3, 3});
      break;
    case 'F':
      if (n == 4) return path({3, 4, 3});
      break;
    default:
      break;
  }
  throw std::invalid_argument("unknown finite type " + name);
}

const std::map<std::string, CoxeterGraph>& corpus() {
  static const std::map<std::string, CoxeterGraph> all = [] {
    std::map<std::string, CoxeterGraph> m{
        {"P3", p3()},
        {"C4", c4()},
        {"C5", c5()},
        {"G6", g6()},
        {"T333", triangle333()},
        {"T244", triangle244()},
        {"C4+a2", c4_apex2()},
        {"C4+a3", c4_apex3()},
        {"Q3", cube()},
        {"C5_3", c5_one3()},
        {"Prism", prism()},
        {"Inf2", graph("v a b")},
        {"Point", graph("v a")},
        {"A~3", diagram("v a b c d; e a b 3; e b c 3; e c d 3; e d a 3")},
    };
    for (const char* t : {"A3", "B3", "H3", "D4", "F4", "I2(5)"}) m.emplace(t, finite_type(t));
    return m;
  }();
  return all;
}

CoxeterGraph from_labels(int n, const std::vector<int>& labels) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (labels[k] != 0) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), labels[k]});
    }
  }
  return CoxeterGraph(std::move(names), edges);
}

CoxeterGraph random_graph(std::mt19937_64& rng, int n, const std::vector<int>& alphabet) {
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::vector<int> labels(n * (n - 1) / 2);
  for (int& l : labels) l = alphabet[pick(rng)];
  return from_labels(n, labels);
}

}  // namespace cox::test
