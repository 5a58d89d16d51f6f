#include "fairrep/perm.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "fairrep/error.hpp"

namespace fairrep {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> hit(image_.size(), 0);
  for (int x : image_) {
    if (x < 0 || x >= degree() || hit[x]) throw InputError("permutation image is not a bijection");
    hit[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (image_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < degree(); ++i) inv[image_[i]] = i;
  Permutation p;
  p.image_ = std::move(inv);
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  int n = std::max(a.degree(), b.degree());
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = a(b(i));
  Permutation p;
  p.image_ = std::move(img);
  return p;
}

PermGroup::PermGroup(int n, std::vector<Permutation> generators) : n_(n), gens_(std::move(generators)) {
  for (const auto& s : gens_)
    if (s.degree() != n_)
      throw InputError("generator of degree " + std::to_string(s.degree()) + " in group of degree " +
                       std::to_string(n_));
}

OrbitPartition::OrbitPartition(std::vector<std::vector<int>> classes) : classes_(std::move(classes)) {
  int n = 0;
  for (auto& c : classes_) {
    std::sort(c.begin(), c.end());
    n += static_cast<int>(c.size());
  }
  classes_.erase(std::remove_if(classes_.begin(), classes_.end(), [](const auto& c) { return c.empty(); }),
                 classes_.end());
  std::sort(classes_.begin(), classes_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  index_.assign(n, -1);
  for (int id = 0; id < count(); ++id)
    for (int x : classes_[id]) {
      if (x < 0 || x >= n || index_[x] != -1) throw InputError("orbit classes do not partition 0..n-1");
      index_[x] = id;
    }
}

OrbitPartition OrbitPartition::singletons(int n) {
  std::vector<std::vector<int>> cls(n);
  for (int i = 0; i < n; ++i) cls[i] = {i};
  return OrbitPartition(std::move(cls));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

OrbitPartition closure_orbits(int n, const std::vector<Permutation>& gens) {
  UnionFind uf(n);
  for (const auto& s : gens)
    for (int i = 0; i < n; ++i) uf.unite(i, s(i));
  std::vector<std::vector<int>> cls(n);
  for (int i = 0; i < n; ++i) cls[uf.find(i)].push_back(i);
  return OrbitPartition(std::move(cls));
}

// Stable colouring under iterated neighbour-colour refinement. Any
// automorphism preserves it.
std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = static_cast<int>(std::set<int>(color.begin(), color.end()).size());
  for (;;) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (int w : g.neighbors(v)) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
      ids.emplace(sig[v], 0);
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) color[v] = ids[sig[v]];
    if (next == classes) return color;
    classes = next;
  }
}

class MapSearch {
 public:
  MapSearch(const Graph& g, const std::vector<int>& color)
      : g_(g), color_(color), image_(g.order(), -1), preimage_(g.order(), -1) {}

  bool assign(int v, int w) {
    if (!compatible(v, w)) return false;
    image_[v] = w;
    preimage_[w] = v;
    assigned_.push_back(v);
    return true;
  }

  std::optional<Permutation> run() {
    if (!extend()) return std::nullopt;
    return Permutation(image_);
  }

 private:
  bool compatible(int v, int w) const {
    if (image_[v] != -1 || preimage_[w] != -1) return image_[v] == w;
    if (color_[v] != color_[w]) return false;
    for (int u : assigned_)
      if (g_.adjacent(u, v) != g_.adjacent(image_[u], w)) return false;
    return true;
  }

  bool extend() {
    const int n = g_.order();
    int best = -1;
    std::vector<int> best_cands;
    for (int v = 0; v < n; ++v) {
      if (image_[v] != -1) continue;
      std::vector<int> cands;
      for (int w = 0; w < n; ++w)
        if (preimage_[w] == -1 && compatible(v, w)) cands.push_back(w);
      if (cands.empty()) return false;
      if (best == -1 || cands.size() < best_cands.size()) {
        best = v;
        best_cands = std::move(cands);
        if (best_cands.size() == 1) break;
      }
    }
    if (best == -1) return true;
    for (int w : best_cands) {
      image_[best] = w;
      preimage_[w] = best;
      assigned_.push_back(best);
      if (extend()) return true;
      assigned_.pop_back();
      preimage_[w] = -1;
      image_[best] = -1;
    }
    return false;
  }

  const Graph& g_;
  const std::vector<int>& color_;
  std::vector<int> image_;
  std::vector<int> preimage_;
  std::vector<int> assigned_;
};

}  // namespace

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) return false;
  for (const Edge& e : g.edges())
    if (!g.adjacent(p(e.u), p(e.v))) return false;
  return true;
}

AutomorphismSearch search_automorphisms(const Graph& g) {
  const int n = g.order();
  const auto color = refine_colors(g);
  std::vector<Permutation> gens;

  for (int level = n - 1; level >= 0; --level) {
    OrbitPartition reached = closure_orbits(n, gens);
    std::set<int> failed_classes;
    for (int target = level + 1; target < n; ++target) {
      if (color[target] != color[level]) continue;
      int cls = reached.class_of(target);
      if (cls == reached.class_of(level) || failed_classes.count(cls)) continue;

      MapSearch search(g, color);
      bool ok = true;
      for (int fixed = 0; fixed < level && ok; ++fixed) ok = search.assign(fixed, fixed);
      ok = ok && search.assign(level, target);
      std::optional<Permutation> found;
      if (ok) found = search.run();
      if (!found) {
        failed_classes.insert(cls);
        continue;
      }
      if (!is_automorphism(g, *found)) throw DefectError("automorphism search produced a non-automorphism");
      gens.push_back(std::move(*found));
      reached = closure_orbits(n, gens);
      // Class ids shift when orbits merge; rebuild the failed set.
      std::set<int> remapped;
      for (int t = level + 1; t < target; ++t)
        if (color[t] == color[level] && reached.class_of(t) != reached.class_of(level))
          remapped.insert(reached.class_of(t));
      failed_classes = std::move(remapped);
    }
  }

  // Generators found at levels >= i fix 0..i-1 pointwise and generate the
  // pointwise stabiliser of 0..i-1.
  BigInt order = 1;
  for (int level = 0; level < n; ++level) {
    std::vector<Permutation> stab;
    for (const auto& s : gens) {
      bool fixes = true;
      for (int i = 0; i < level && fixes; ++i) fixes = s(i) == i;
      if (fixes) stab.push_back(s);
    }
    auto part = closure_orbits(n, stab);
    order *= static_cast<unsigned>(part.classes()[part.class_of(level)].size());
  }

  std::reverse(gens.begin(), gens.end());
  return {PermGroup(n, std::move(gens)), order};
}

PermGroup automorphism_group(const Graph& g) { return search_automorphisms(g).group; }

std::vector<Permutation> group_elements(const PermGroup& group, std::uint64_t cap) {
  std::set<Permutation> seen;
  std::deque<Permutation> queue;
  auto id = Permutation::identity(group.degree());
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : group.generators()) {
      Permutation y = s * x;
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw std::length_error("group enumeration exceeded cap " + std::to_string(cap));
        queue.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::uint64_t group_order(const PermGroup& group, std::uint64_t cap) {
  return group_elements(group, cap).size();
}

OrbitPartition orbits(const PermGroup& group) { return closure_orbits(group.degree(), group.generators()); }

OrbitPartition orbits(const PermGroup& group, Action action, const Graph& g) {
  if (group.degree() != g.order())
    throw InputError("group degree " + std::to_string(group.degree()) + " does not match " +
                     std::to_string(g.order()) + " vertices");
  if (action == Action::vertices) return orbits(group);
  return orbits(edge_action(g, group));
}

bool is_vertex_transitive(const Graph& g) {
  if (g.order() == 0) return false;
  return orbits(automorphism_group(g)).count() == 1;
}

Permutation edge_permutation(const Graph& g, const Permutation& p) {
  std::vector<int> img(g.size());
  for (int id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    auto target = g.edge_id(Edge(p(e.u), p(e.v)));
    if (!target) throw InputError("permutation does not preserve the edge set");
    img[id] = *target;
  }
  return Permutation(std::move(img));
}

PermGroup edge_action(const Graph& g, const PermGroup& group) {
  std::vector<Permutation> gens;
  for (const auto& s : group.generators()) gens.push_back(edge_permutation(g, s));
  return PermGroup(g.size(), std::move(gens));
}

bool is_invariant(const PermGroup& group, const std::vector<int>& elements) {
  std::set<int> set(elements.begin(), elements.end());
  for (const auto& s : group.generators())
    for (int x : set)
      if (!set.count(s(x))) return false;
  return true;
}

bool is_union_of_classes(const OrbitPartition& partition, const std::vector<int>& elements) {
  std::set<int> set(elements.begin(), elements.end());
  for (int x : set) {
    if (!partition.contains(x)) continue;
    for (int y : partition.classes()[partition.class_of(x)])
      if (!set.count(y)) return false;
  }
  return true;
}

}  // namespace fairrep
