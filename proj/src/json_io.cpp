#include "fairrep/json_io.hpp"

#include <fstream>
#include <limits>

#include "fairrep/error.hpp"

namespace fairrep {

namespace {

Json edge_pair(const Edge& e) { return Json::array({e.u, e.v}); }

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(edge_pair(e));
  return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  auto n = field<int>(j, "n");
  auto raw = field<std::vector<std::vector<int>>>(j, "edges");
  std::vector<Edge> edges;
  for (const auto& e : raw) {
    if (e.size() != 2) throw InputError("edge entries must be pairs");
    if (e[0] == e[1]) throw InputError("loop at vertex " + std::to_string(e[0]));
    edges.emplace_back(e[0], e[1]);
  }
  return Graph(n, std::move(edges));
}

Json to_json(const EdgeSet& x) {
  Json out = Json::array();
  for (const Edge& e : x) out.push_back(edge_pair(e));
  return out;
}

Json to_json(const Permutation& p) { return p.image(); }

Json to_json(const OrbitPartition& p) { return p.classes(); }

Json to_json(const Copy& c) {
  return {{"vertices", c.vertices}, {"edges", to_json(EdgeSet(c.edges.begin(), c.edges.end()))}};
}

Json to_json(const HittingResult& r) {
  return {{"value", r.value}, {"witness", r.witness}, {"witness_orbits", r.witness_orbits}};
}

Json to_json(const Cover& c) { return {{"tau", c.tau}, {"a", c.a}, {"b", c.b}}; }

Json to_json(const BoundCheck& c) {
  return {{"name", c.name}, {"lhs", to_string(c.lhs)}, {"rhs", to_string(c.rhs)}, {"holds", c.holds}};
}

Json to_json(const BigInt& n) {
  if (n >= 0 && n <= std::numeric_limits<std::int64_t>::max()) return n.convert_to<std::int64_t>();
  return n.str();
}

Json to_json(const SymmetrizationReport& r) {
  Json ledger = Json::array();
  for (const auto& e : r.ledger)
    ledger.push_back({{"orbit", e.orbit}, {"size", e.size}, {"hits", e.hits}, {"admitted", e.admitted}});
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  Json out = {{"Y", r.y},
              {"k", r.k},
              {"bound", r.bound ? Json(to_string(*r.bound)) : Json(nullptr)},
              {"bound_factor", r.bound_factor() ? Json(to_string(*r.bound_factor())) : Json(nullptr)},
              {"orbits", r.classes},
              {"ledger", ledger},
              {"checks", checks},
              {"ok", r.ok()}};
  if (r.lift)
    out["lift"] = {{"E", r.lift->e_size},
                   {"lifted_max_size", to_json(r.lift->lifted_max_size)},
                   {"multiplicity", r.lift->multiplicity}};
  return out;
}

Json to_json(const PipelineTrace& t) {
  Json delta_edges = Json::array();
  for (auto [a, b] : t.delta.graph.edges()) delta_edges.push_back({a, b});
  Json a_edges = Json::array();
  for (const auto& es : t.delta.a_edges) a_edges.push_back(to_json(EdgeSet(es.begin(), es.end())));
  Json checks = Json::array();
  for (const auto& c : t.steps) {
    Json j = to_json(c);
    j["kind"] = "step";
    checks.push_back(j);
  }
  for (const auto& c : t.conclusions) {
    Json j = to_json(c);
    j["kind"] = "conclusion";
    checks.push_back(j);
  }
  return {{"tail_vertex", t.decomposition.tail_vertex},
          {"tail_edge", edge_pair(t.decomposition.tail_edge)},
          {"body", to_json(t.decomposition.body)},
          {"X", to_json(t.x)},
          {"pair_family_size", t.pair_family.functions.size()},
          {"M", t.weighted.bound ? Json(to_string(*t.weighted.bound)) : Json(nullptr)},
          {"Y_prime", to_json(t.y_prime)},
          {"Gamma_prime", to_json(t.gamma_prime)},
          {"X_prime", to_json(t.x_prime)},
          {"delta",
           {{"a_size", t.delta.graph.a_size()},
            {"b_size", t.delta.graph.b_size()},
            {"a_sets", t.delta.a_sets},
            {"a_edges", a_edges},
            {"b_edges", to_json(EdgeSet(t.delta.b_edges.begin(), t.delta.b_edges.end()))},
            {"edges", delta_edges}}},
          {"Q", {{"a", t.q.a}, {"b", t.q.b}}},
          {"Q_prime", to_json(t.q_prime)},
          {"Y_double_prime_A", to_json(t.y_double_prime_a)},
          {"Y_double_prime_B", to_json(t.y_double_prime_b)},
          {"Y_double_prime", to_json(t.y_double_prime)},
          {"Y", to_json(t.y)},
          {"bound_checks", checks},
          {"defect", t.defect ? Json(*t.defect) : Json(nullptr)},
          {"ok", t.all_hold()},
          {"conclusions_hold", t.conclusions_hold()}};
}

FamilyOfSets family_from_json(const Json& j) {
  return FamilyOfSets{field<std::vector<std::vector<int>>>(j, "sets")};
}

Json to_json(const FamilyOfSets& f) { return {{"sets", f.sets}}; }

WeightedFamily weighted_family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("functions") || !j["functions"].is_array())
    throw InputError("missing 'functions' array");
  WeightedFamily fam;
  for (const auto& fj : j["functions"]) {
    if (!fj.is_object() || !fj.contains("weights") || !fj["weights"].is_array())
      throw InputError("function entry needs a 'weights' array");
    std::map<int, Rational> weights;
    for (const auto& wj : fj["weights"]) {
      int element = field<int>(wj, "element");
      if (!wj.contains("w")) throw InputError("missing field 'w'");
      Rational w = wj["w"].is_string() ? parse_rational(wj["w"].get<std::string>())
                   : wj["w"].is_number_integer() ? Rational(wj["w"].get<std::int64_t>())
                                                 : throw InputError("weight must be a \"p/q\" string");
      if (!weights.emplace(element, w).second)
        throw InputError("element " + std::to_string(element) + " weighted twice in one function");
    }
    fam.functions.emplace_back(std::move(weights));
  }
  return fam;
}

Json to_json(const WeightedFamily& f) {
  Json fns = Json::array();
  for (const auto& fn : f.functions) {
    Json ws = Json::array();
    for (const auto& [e, w] : fn.weights()) ws.push_back({{"element", e}, {"w", to_string(w)}});
    fns.push_back({{"weights", ws}});
  }
  return {{"functions", fns}};
}

PermGroup group_from_json(const Json& j) {
  auto raw = field<std::vector<std::vector<int>>>(j, "generators");
  int degree = j.contains("degree") ? field<int>(j, "degree") : (raw.empty() ? 0 : static_cast<int>(raw.front().size()));
  std::vector<Permutation> gens;
  for (auto& img : raw) gens.emplace_back(std::move(img));
  return PermGroup(degree, std::move(gens));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace fairrep
