#pragma once

#include <string>

#include <json.hpp>

#include "cox/classify.hpp"
#include "cox/multitail.hpp"
#include "cox/walls.hpp"

namespace cox {

using Json = nlohmann::ordered_json;

Json to_json(const CoxeterGraph& g, VertexSet s);
Json to_json(const CoxeterGraph& g, const Word& w);
Json to_json(const CoxeterGraph& g, const WideDecomposition& d);
Json to_json(const CoxeterGraph& g, const SpecialJoin& j);
Json to_json(const CoxeterGraph& g, const AvoidanceReport& r);
Json to_json(const CoxeterGraph& g, const EndsVerdict& e);
Json to_json(const GroupConstants& c);
Json to_json(const CoxeterGraph& g, const Splitting& s);
Json to_json(const CoxeterGraph& g, const ClassificationVerdict& v);
Json to_json(const CoxeterGraph& g, const Reflection& r);
Json to_json(const CoxeterGraph& g, const Pencil& p);
Json to_json(const CoxeterGraph& g, const WindowReport& r);
Json to_json(const CoxeterGraph& g, const CayleyBall& b);
Json to_json(const CoxeterGraph& g, const FanDiagram& f);
Json to_json(const std::vector<Violation>& v);
Json to_json(const FilterReport& r);
Json to_json(const CoxeterGraph& g, const FilterDiagram& f);
Json to_json(const CoxeterGraph& g, const MultiTailFilter& m);

VertexSet vertex_set_from_json(const CoxeterGraph& g, const Json& j);
Word word_from_json(const CoxeterGraph& g, const Json& j);
ClassificationVerdict verdict_from_json(const CoxeterGraph& g, const Json& j);
FilterDiagram filter_from_json(const CoxeterGraph& g, const Json& j);

std::string to_dot(const CoxeterGraph& g, const FilterDiagram& f);
std::string to_dot(const CoxeterGraph& g, const FanDiagram& f);

// Indented human-readable rendering of any of the JSON documents above.
std::string pretty(const Json& j);

}  // namespace cox
