#include "safecol/io.hpp"

namespace safecol {

namespace {

template <class T>
T field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw PreconditionError(std::string("missing field \"") + name + "\"");
  }
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw PreconditionError(std::string("field \"") + name + "\" has the wrong type");
  }
}

}  // namespace

Json graph_to_json(const NearTriangulation& g) {
  Json edges = Json::array(), tris = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e[0] + 1, e[1] + 1});
  for (const auto& t : g.triangles()) tris.push_back({t[0] + 1, t[1] + 1, t[2] + 1});
  return {{"boundary_len", g.boundary_len()},
          {"internal_count", g.internal_count()},
          {"edges", edges},
          {"triangles", tris}};
}

NearTriangulation graph_from_json(const Json& j) {
  RawGraph raw;
  raw.boundary_len = field<int>(j, "boundary_len");
  raw.internal_count = field<int>(j, "internal_count");
  for (const auto& e : field<std::vector<std::vector<int>>>(j, "edges")) {
    if (e.size() != 2) throw PreconditionError("edge entries need two vertices");
    raw.edges.push_back({e[0] - 1, e[1] - 1});
  }
  for (const auto& t : field<std::vector<std::vector<int>>>(j, "triangles")) {
    if (t.size() != 3) throw PreconditionError("triangle entries need three vertices");
    raw.triangles.push_back({t[0] - 1, t[1] - 1, t[2] - 1});
  }
  return validate_near_triangulation(raw);
}

Json colouring_to_json(const CycleColouring& c) {
  return {{"k", c.k()}, {"colours", std::vector<Colour>(c.colours().begin(), c.colours().end())}};
}

CycleColouring colouring_from_json(const Json& j) {
  return CycleColouring(field<int>(j, "k"), field<std::vector<Colour>>(j, "colours"));
}

Json full_colouring_to_json(int k, const FullColouring& c) {
  return {{"k", k}, {"colours", c}};
}

Json verdict_to_json(const Verdict& v) {
  Json out{{"verdict", to_string(v.kind)}, {"condition", nullptr}, {"indices", Json::array()},
           {"A", Json::array()}};
  if (v.bad) {
    out["condition"] = v.bad->condition;
    out["indices"] = v.bad->indices;
  } else if (v.good) {
    out["condition"] = v.good->condition;
    out["indices"] = v.good->indices;
    out["A"] = v.good->A;
  }
  return out;
}

Json gadget_to_json(const Gadget& g) {
  return {{"kind", to_string(g.kind)},
          {"condition", g.source.condition},
          {"indices", g.source.indices},
          {"graph", graph_to_json(g.graph)}};
}

Json probe_to_json(const ProbeVerdict& p) {
  Json out{{"colouring", colouring_to_json(p.colouring)},
           {"n_max", p.n_max},
           {"outcome", p.counterexample ? "counterexample" : "no_counterexample"},
           {"counterexample", nullptr}};
  if (p.counterexample) out["counterexample"] = graph_to_json(*p.counterexample);
  return out;
}

}  // namespace safecol
