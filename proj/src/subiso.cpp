#include "fairrep/subiso.hpp"

#include <algorithm>
#include <set>

#include "fairrep/error.hpp"

namespace fairrep {

namespace {

class Embedder {
 public:
  Embedder(const Graph& pattern, const Graph& host) : pattern_(pattern), host_(host) {
    const int k = pattern.order();
    // Next vertex: most already-placed neighbours, then highest degree.
    std::vector<char> placed(k, 0);
    for (int step = 0; step < k; ++step) {
      int best = -1, best_links = -1;
      for (int v = 0; v < k; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int w : pattern.neighbors(v)) links += placed[w];
        if (links > best_links || (links == best_links && pattern.degree(v) > pattern.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
    }
    position_.assign(k, -1);
    for (int i = 0; i < k; ++i) position_[order_[i]] = i;
    earlier_.resize(k);
    for (int i = 0; i < k; ++i)
      for (int w : pattern.neighbors(order_[i]))
        if (position_[w] < i) earlier_[i].push_back(w);
  }

  int root_vertex() const { return order_.front(); }

  void from_root(int root, std::vector<Copy>& out) const {
    std::vector<int> image(pattern_.order(), -1);
    std::vector<char> used(host_.order(), 0);
    if (!fits(root, 0, image, used)) return;
    image[order_[0]] = root;
    used[root] = 1;
    extend(1, image, used, out);
  }

 private:
  bool fits(int w, int i, const std::vector<int>& image, const std::vector<char>& used) const {
    if (used[w] || host_.degree(w) < pattern_.degree(order_[i])) return false;
    for (int p : earlier_[i])
      if (!host_.adjacent(image[p], w)) return false;
    return true;
  }

  void extend(int i, std::vector<int>& image, std::vector<char>& used, std::vector<Copy>& out) const {
    if (i == pattern_.order()) {
      Copy c;
      for (const Edge& e : pattern_.edges()) c.edges.emplace_back(image[e.u], image[e.v]);
      std::sort(c.edges.begin(), c.edges.end());
      c.vertices = image;
      std::sort(c.vertices.begin(), c.vertices.end());
      out.push_back(std::move(c));
      return;
    }
    const int v = order_[i];
    auto try_vertex = [&](int w) {
      if (!fits(w, i, image, used)) return;
      image[v] = w;
      used[w] = 1;
      extend(i + 1, image, used, out);
      used[w] = 0;
      image[v] = -1;
    };
    if (!earlier_[i].empty()) {
      for (int w : host_.neighbors(image[earlier_[i].front()])) try_vertex(w);
    } else {
      for (int w = 0; w < host_.order(); ++w) try_vertex(w);
    }
  }

  const Graph& pattern_;
  const Graph& host_;
  std::vector<int> order_;
  std::vector<int> position_;
  std::vector<std::vector<int>> earlier_;
};

void check_pattern(const Graph& pattern) {
  if (pattern.size() == 0) throw InputError("pattern has no edges");
  for (int v = 0; v < pattern.order(); ++v)
    if (pattern.degree(v) == 0) throw InputError("pattern vertex " + std::to_string(v) + " is isolated");
}

std::vector<Copy> merge(std::vector<std::vector<Copy>>& per_root) {
  std::set<Copy> unique;
  for (auto& bucket : per_root)
    for (auto& c : bucket) unique.insert(std::move(c));
  return {unique.begin(), unique.end()};
}

}  // namespace

std::vector<Copy> enumerate_copies(const Graph& pattern, const Graph& host) {
  check_pattern(pattern);
  Embedder embedder(pattern, host);
  const int roots = host.order();
  std::vector<std::vector<Copy>> per_root(roots);
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < roots; ++r) embedder.from_root(r, per_root[r]);
  return merge(per_root);
}

std::vector<Copy> enumerate_copies_serial(const Graph& pattern, const Graph& host) {
  check_pattern(pattern);
  Embedder embedder(pattern, host);
  std::vector<std::vector<Copy>> per_root(host.order());
  for (int r = 0; r < host.order(); ++r) embedder.from_root(r, per_root[r]);
  return merge(per_root);
}

HitPartition copies_hit_by(const std::vector<Copy>& copies, const EdgeSet& x) {
  HitPartition out;
  for (int i = 0; i < static_cast<int>(copies.size()); ++i) {
    bool hit = std::any_of(copies[i].edges.begin(), copies[i].edges.end(),
                           [&](const Edge& e) { return x.count(e) > 0; });
    (hit ? out.hit : out.missed).push_back(i);
  }
  return out;
}

std::vector<std::vector<int>> copy_edge_ids(const Graph& host, const std::vector<Copy>& copies) {
  std::vector<std::vector<int>> sets;
  sets.reserve(copies.size());
  for (const Copy& c : copies) sets.push_back(edge_ids(host, EdgeSet(c.edges.begin(), c.edges.end())));
  return sets;
}

}  // namespace fairrep
