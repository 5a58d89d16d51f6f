#include "fairrep/tadpole.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fairrep/cover_opt.hpp"
#include "fairrep/error.hpp"
#include "fairrep/perm.hpp"

namespace fairrep {

TadpoleDecomposition validate_tadpole(const Graph& k) {
  if (k.size() < 2) throw InputError("tadpole pattern needs at least two edges");
  if (!is_connected(k)) throw InputError("tadpole pattern must be connected");
  std::vector<int> leaves;
  for (int v = 0; v < k.order(); ++v)
    if (k.degree(v) == 1) leaves.push_back(v);
  if (leaves.size() != 1)
    throw InputError("tadpole pattern needs exactly one degree-1 vertex, found " + std::to_string(leaves.size()));

  TadpoleDecomposition d;
  d.tail_vertex = leaves.front();
  d.tail_edge = Edge(d.tail_vertex, k.neighbors(d.tail_vertex).front());
  std::vector<int> relabel(k.order(), -1);
  for (int v = 0; v < k.order(); ++v)
    if (v != d.tail_vertex) {
      relabel[v] = static_cast<int>(d.body_labels.size());
      d.body_labels.push_back(v);
    }
  std::vector<Edge> body_edges;
  for (const Edge& e : k.edges())
    if (e != d.tail_edge) body_edges.emplace_back(relabel[e.u], relabel[e.v]);
  d.body = Graph(static_cast<int>(d.body_labels.size()), std::move(body_edges));

  if (d.body.order() < 2) throw InputError("tadpole body is too small");
  if (!is_vertex_transitive(d.body)) throw InputError("tadpole body is not vertex-transitive");
  if (edge_connectivity(d.body) < 2)
    throw InputError("tadpole body is vertex-transitive but has a bridge");
  return d;
}

namespace {

// Weight function with weights doubled so that they stay integral (1 or 2).
using DoubledWeights = std::vector<std::pair<int, int>>;

bool union_connected(const Copy& p, const Copy& q) {
  std::vector<int> verts;
  std::set_union(p.vertices.begin(), p.vertices.end(), q.vertices.begin(), q.vertices.end(),
                 std::back_inserter(verts));
  std::vector<int> parent(verts.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto index = [&](int v) { return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()); };
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  size_t parts = verts.size();
  for (const Copy* c : {&p, &q})
    for (const Edge& e : c->edges) {
      int a = find(index(e.u)), b = find(index(e.v));
      if (a != b) {
        parent[a] = b;
        --parts;
      }
    }
  return parts == 1;
}

std::optional<DoubledWeights> pair_function(const Graph& gamma, const Copy& p, const Copy& q) {
  if (p.vertices == q.vertices) return std::nullopt;
  // Equal-size vertex sets: each differs from the union iff they differ.
  if (!union_connected(p, q)) return std::nullopt;
  std::map<int, int> w;
  for (const Edge& e : p.edges) w[*gamma.edge_id(e)] += 1;
  for (const Edge& e : q.edges) w[*gamma.edge_id(e)] += 1;
  return DoubledWeights(w.begin(), w.end());
}

WeightedFamily to_family(const std::set<DoubledWeights>& unique) {
  WeightedFamily fam;
  for (const auto& dw : unique) {
    std::map<int, Rational> weights;
    for (auto [e, twice] : dw) weights.emplace(e, Rational(twice, 2));
    fam.functions.emplace_back(std::move(weights));
  }
  return fam;
}

}  // namespace

WeightedFamily build_pair_family(const Graph& gamma, const Graph& body) {
  const auto copies = enumerate_copies(body, gamma);
  const int n = static_cast<int>(copies.size());
  std::vector<std::vector<DoubledWeights>> per_row(n);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (auto f = pair_function(gamma, copies[i], copies[j])) per_row[i].push_back(std::move(*f));
  std::set<DoubledWeights> unique;
  for (auto& row : per_row)
    for (auto& f : row) unique.insert(std::move(f));
  return to_family(unique);
}

WeightedFamily build_pair_family_serial(const Graph& gamma, const Graph& body) {
  const auto copies = enumerate_copies_serial(body, gamma);
  std::set<DoubledWeights> unique;
  for (size_t i = 0; i < copies.size(); ++i)
    for (size_t j = i + 1; j < copies.size(); ++j)
      if (auto f = pair_function(gamma, copies[i], copies[j])) unique.insert(std::move(*f));
  return to_family(unique);
}

Delta build_delta(const Graph& gamma_prime, const Graph& body) {
  Delta d;
  std::map<std::vector<int>, std::set<Edge>> by_vertex_set;
  for (auto& c : enumerate_copies(body, gamma_prime)) by_vertex_set[c.vertices].insert(c.edges.begin(), c.edges.end());

  std::vector<int> owner(gamma_prime.order(), -1);
  for (auto& [verts, edges] : by_vertex_set) {
    const int id = static_cast<int>(d.a_sets.size());
    for (int v : verts) {
      if (owner[v] != -1)
        throw DefectError("body copies on different vertex sets share vertex " + std::to_string(v));
      owner[v] = id;
    }
    d.a_sets.push_back(verts);
    d.a_edges.emplace_back(edges.begin(), edges.end());
  }

  d.b_edges = gamma_prime.edges();
  std::vector<std::pair<int, int>> adj;
  for (int b = 0; b < static_cast<int>(d.b_edges.size()); ++b) {
    const int ou = owner[d.b_edges[b].u], ov = owner[d.b_edges[b].v];
    if (ou == ov) continue;
    if (ou != -1) adj.emplace_back(ou, b);
    if (ov != -1) adj.emplace_back(ov, b);
  }
  d.graph = BipartiteGraph(static_cast<int>(d.a_sets.size()), static_cast<int>(d.b_edges.size()), std::move(adj));
  return d;
}

bool PipelineTrace::conclusions_hold() const {
  return complete() && std::all_of(conclusions.begin(), conclusions.end(), [](const BoundCheck& c) { return c.holds; });
}

bool PipelineTrace::all_hold() const {
  return conclusions_hold() && std::all_of(steps.begin(), steps.end(), [](const BoundCheck& c) { return c.holds; });
}

namespace {

EdgeSet set_minus(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

Rational count(size_t n) { return Rational(static_cast<std::int64_t>(n)); }

BoundCheck equality(std::string name, const Rational& lhs, const Rational& rhs) {
  return {std::move(name), lhs, rhs, lhs == rhs};
}

}  // namespace

PipelineTrace symmetric_tadpole_representatives(const Graph& k, const Graph& gamma, std::optional<EdgeSet> x) {
  PipelineTrace t;
  t.decomposition = validate_tadpole(k);
  const Graph& body = t.decomposition.body;
  const Rational factor = count(k.size() - 1);

  const auto copies = enumerate_copies(k, gamma);
  const FamilyOfSets copy_family{copy_edge_ids(gamma, copies)};
  if (x) {
    for (const Edge& e : *x)
      if (!gamma.has_edge(e)) throw InputError("X contains an edge absent from the host");
    if (!copies_hit_by(copies, *x).missed.empty()) throw Infeasible("X does not hit every copy of the pattern");
    t.x = *x;
  } else {
    t.x = edges_of(gamma, min_hitting_set(copy_family).witness);
  }
  const auto x_ids = edge_ids(gamma, t.x);

  // Stage 1: Y' from the weighted symmetrisation of the pair family.
  t.pair_family = build_pair_family(gamma, body);
  const auto weak = check_representatives(t.pair_family, x_ids);
  t.steps.push_back(make_check("pair functions with X-mass < 1", count(weak.size()), 0));
  if (!weak.empty()) {
    t.defect = "X is not a system of weighted representatives for the pair family";
    return t;
  }
  const PermGroup aut = automorphism_group(gamma);
  const OrbitPartition edge_orbits = orbits(aut, Action::edges, gamma);
  t.weighted = symmetrize_weighted(t.pair_family, x_ids, edge_orbits);
  t.y_prime = edges_of(gamma, t.weighted.y);
  t.steps.push_back(make_check("pair functions with Y'-mass < 1", count(check_representatives(t.pair_family, t.weighted.y).size()), 0));
  if (t.weighted.bound) t.steps.push_back(equality("M == |E(K)|-1", *t.weighted.bound, factor));
  std::vector<int> xy;
  std::set_intersection(x_ids.begin(), x_ids.end(), t.weighted.y.begin(), t.weighted.y.end(), std::back_inserter(xy));
  t.steps.push_back(make_check("|Y'| <= (|E(K)|-1)*|X∩Y'|", count(t.y_prime.size()), factor * count(xy.size())));

  // Stage 2: Gamma' = Gamma \ Y' and X' = X \ Y'.
  t.gamma_prime = delete_edges(gamma, t.y_prime);
  t.x_prime = set_minus(t.x, t.y_prime);
  const auto copies_prime = enumerate_copies(k, t.gamma_prime);
  t.steps.push_back(make_check("copies in Gamma' missed by X'", count(copies_hit_by(copies_prime, t.x_prime).missed.size()), 0));

  // Stage 3: Delta; body copies in Gamma' have equal or disjoint vertex sets.
  try {
    t.delta = build_delta(t.gamma_prime, body);
  } catch (const DefectError& e) {
    t.defect = e.what();
    return t;
  }
  const int a_count = t.delta.graph.a_size();
  std::vector<int> owner(t.gamma_prime.order(), -1);
  for (int a = 0; a < a_count; ++a)
    for (int v : t.delta.a_sets[a]) owner[v] = a;

  // Q: sets spanned by an edge of X', plus the edges of X' spanned by none.
  std::set<int> q_a;
  for (const Edge& e : t.x_prime) {
    if (owner[e.u] != -1 && owner[e.u] == owner[e.v]) {
      q_a.insert(owner[e.u]);
    } else {
      t.q.b.push_back(*t.gamma_prime.edge_id(e));
    }
  }
  t.q.a.assign(q_a.begin(), q_a.end());
  std::sort(t.q.b.begin(), t.q.b.end());
  int uncovered = 0;
  {
    std::set<int> qa(t.q.a.begin(), t.q.a.end()), qb(t.q.b.begin(), t.q.b.end());
    for (auto [a, b] : t.delta.graph.edges())
      if (!qa.count(a) && !qb.count(b)) ++uncovered;
  }
  t.steps.push_back(make_check("Delta edges missed by Q", uncovered, 0));
  t.steps.push_back(make_check("|Q| <= |X'|", t.q.size(), count(t.x_prime.size())));

  // Stage 4: canonical minimum cover and Y''.
  t.q_prime = invariant_min_cover(t.delta.graph);
  t.steps.push_back(make_check("|Q'| <= |Q|", t.q_prime.size(), t.q.size()));
  std::size_t widest = 0;
  for (int a : t.q_prime.a) {
    widest = std::max(widest, t.delta.a_edges[a].size());
    t.y_double_prime_a.insert(t.delta.a_edges[a].begin(), t.delta.a_edges[a].end());
  }
  for (int b : t.q_prime.b) t.y_double_prime_b.insert(t.delta.b_edges[b]);
  t.y_double_prime = t.y_double_prime_a;
  t.y_double_prime.insert(t.y_double_prime_b.begin(), t.y_double_prime_b.end());
  t.steps.push_back(make_check("edges on one vertex set of Q'∩A <= |E(K0)|", count(widest), count(body.size())));
  t.steps.push_back(make_check("|Y''_A| <= (|E(K)|-1)*|Q'∩A|", count(t.y_double_prime_a.size()),
                               factor * count(t.q_prime.a.size())));
  t.steps.push_back(make_check("|Y''| <= (|E(K)|-1)*|X'|", count(t.y_double_prime.size()), factor * count(t.x_prime.size())));
  const auto after = enumerate_copies(k, delete_edges(t.gamma_prime, t.y_double_prime));
  t.steps.push_back(make_check("copies in Gamma' \\ Y''", count(after.size()), 0));

  // Stage 5: Y = Y' ∪ Y''.
  t.y = t.y_prime;
  t.y.insert(t.y_double_prime.begin(), t.y_double_prime.end());
  int split = 0;
  for (const auto& cls : edge_orbits.classes()) {
    std::size_t inside = 0;
    for (int e : cls) inside += t.y.count(gamma.edge(e));
    if (inside != 0 && inside != cls.size()) ++split;
  }
  t.conclusions.push_back(make_check("edge orbits split by Y", split, 0));
  t.conclusions.push_back(make_check("copies in Gamma \\ Y", count(enumerate_copies(k, delete_edges(gamma, t.y)).size()), 0));
  t.conclusions.push_back(make_check("|Y| <= (|E(K)|-1)*|X|", count(t.y.size()), factor * count(t.x.size())));
  return t;
}

}  // namespace fairrep
