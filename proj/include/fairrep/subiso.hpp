#pragma once

#include <vector>

#include "fairrep/graph.hpp"

namespace fairrep {

// Image of a (not necessarily induced) embedding of a pattern into a host.
// Edges come first so that the default ordering is by sorted edge list.
struct Copy {
  std::vector<Edge> edges;
  std::vector<int> vertices;

  friend auto operator<=>(const Copy&, const Copy&) = default;
};

// All distinct copies of `pattern` in `host`, sorted. The pattern must have
// at least one edge and no isolated vertices. Root assignments are searched
// in parallel when OpenMP is available.
std::vector<Copy> enumerate_copies(const Graph& pattern, const Graph& host);
// Single-threaded reference with identical output.
std::vector<Copy> enumerate_copies_serial(const Graph& pattern, const Graph& host);

struct HitPartition {
  std::vector<int> hit;
  std::vector<int> missed;
};

// Indices of copies whose edge set meets / avoids x.
HitPartition copies_hit_by(const std::vector<Copy>& copies, const EdgeSet& x);

// Each copy as a sorted list of host edge ids.
std::vector<std::vector<int>> copy_edge_ids(const Graph& host, const std::vector<Copy>& copies);

}  // namespace fairrep
