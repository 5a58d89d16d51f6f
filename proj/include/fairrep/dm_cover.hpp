#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fairrep {

// Bipartite graph with parts A = 0..a_size-1 and B = 0..b_size-1.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  // Throws InputError on out-of-range indices or duplicate edges.
  BipartiteGraph(int a_size, int b_size, std::vector<std::pair<int, int>> edges);

  int a_size() const { return a_size_; }
  int b_size() const { return b_size_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& a_neighbors(int a) const { return a_adj_[a]; }
  const std::vector<int>& b_neighbors(int b) const { return b_adj_[b]; }

 private:
  int a_size_ = 0;
  int b_size_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> a_adj_;
  std::vector<std::vector<int>> b_adj_;
};

// "p <a_size> <b_size>" followed by "a b" lines.
BipartiteGraph parse_bipartite(std::string_view text);
BipartiteGraph read_bipartite_file(const std::string& path);

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (a, b), sorted by a
  int size() const { return static_cast<int>(pairs.size()); }
};

Matching max_matching(const BipartiteGraph& g);

// Maximum matching size with the flagged vertices deleted.
int matching_number(const BipartiteGraph& g, const std::vector<char>& removed_a,
                    const std::vector<char>& removed_b);

struct CoverMembership {
  int tau = 0;
  std::vector<char> a_some, a_all;
  std::vector<char> b_some, b_all;
};

// For every vertex: does it lie in some / every minimum vertex cover.
// Vertex tests run in parallel when OpenMP is available.
CoverMembership min_cover_membership(const BipartiteGraph& g);
CoverMembership min_cover_membership_serial(const BipartiteGraph& g);

struct Cover {
  int tau = 0;
  std::vector<int> a;
  std::vector<int> b;
  int size() const { return static_cast<int>(a.size() + b.size()); }
};

bool is_cover(const BipartiteGraph& g, const std::vector<int>& a, const std::vector<int>& b);

// A-vertices lying in all minimum covers together with B-vertices lying in
// at least one. This is a minimum cover fixed by every part-preserving
// automorphism; both facts are checked before returning.
Cover invariant_min_cover(const BipartiteGraph& g);

}  // namespace fairrep
