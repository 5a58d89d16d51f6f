#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fairrep {

// Undirected edge, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeSet = std::set<Edge>;

// Finite simple undirected graph on vertices 0..n-1. Immutable once built;
// edges are kept sorted so that edge ids (positions in edges()) are stable.
class Graph {
 public:
  Graph() = default;
  // Throws InputError on loops, duplicate edges or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int a, int b) const { return matrix_[a * n_ + b] != 0; }
  std::optional<int> edge_id(const Edge& e) const;
  bool has_edge(const Edge& e) const { return edge_id(e).has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> matrix_;
};

// Edge-list text: optional first line "n <count>", then one "u v" per line.
// Blank lines and lines starting with '#' are skipped.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string to_edge_list(const Graph& g);

Graph delete_edges(const Graph& g, const EdgeSet& x);
bool is_connected(const Graph& g);
// Minimum edge cut; requires a connected graph with at least two vertices.
int edge_connectivity(const Graph& g);

std::vector<int> edge_ids(const Graph& g, const EdgeSet& x);
EdgeSet edges_of(const Graph& g, const std::vector<int>& ids);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

}  // namespace fairrep
