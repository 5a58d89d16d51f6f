#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairrep/dm_cover.hpp"
#include "fairrep/graph.hpp"
#include "fairrep/subiso.hpp"
#include "fairrep/symmetrize.hpp"

namespace fairrep {

struct TadpoleDecomposition {
  int tail_vertex = -1;
  Edge tail_edge;
  Graph body;                    // K minus the tail vertex, relabelled in order
  std::vector<int> body_labels;  // body vertex -> vertex of K
};

// Accepts a connected K with exactly one degree-1 vertex whose removal
// leaves a vertex-transitive, 2-edge-connected body. Throws InputError
// otherwise.
TadpoleDecomposition validate_tadpole(const Graph& k);

// One function per pair of body copies K', K'' with connected union and
// different vertex sets: weight 1 on shared edges, 1/2 on the other edges
// of the union. Deduplicated, sorted, over edge ids of gamma.
WeightedFamily build_pair_family(const Graph& gamma, const Graph& body);
WeightedFamily build_pair_family_serial(const Graph& gamma, const Graph& body);

// Bipartite graph whose A-side is the vertex sets of body copies in
// gamma_prime and whose B-side is its edges; a ~ b iff exactly one end of b
// lies in a. Throws DefectError if two distinct copy vertex sets overlap.
struct Delta {
  BipartiteGraph graph;
  std::vector<std::vector<int>> a_sets;     // sorted vertex sets
  std::vector<std::vector<Edge>> a_edges;   // union of edges of copies on a_sets[i]
  std::vector<Edge> b_edges;                // = gamma_prime.edges()
};

Delta build_delta(const Graph& gamma_prime, const Graph& body);

struct PipelineTrace {
  TadpoleDecomposition decomposition;
  EdgeSet x;
  WeightedFamily pair_family;
  SymmetrizationReport weighted;
  EdgeSet y_prime;
  Graph gamma_prime;
  EdgeSet x_prime;
  Delta delta;
  Cover q;        // the cover read off X'
  Cover q_prime;  // canonical minimum cover of Delta
  EdgeSet y_double_prime_a;
  EdgeSet y_double_prime_b;
  EdgeSet y_double_prime;
  EdgeSet y;

  // Intermediate inequalities of the construction.
  std::vector<BoundCheck> steps;
  // Soundness, invariance and the final bound.
  std::vector<BoundCheck> conclusions;
  // Set when a stage could not run; the trace then stops there.
  std::optional<std::string> defect;

  bool complete() const { return !defect.has_value(); }
  bool conclusions_hold() const;
  bool all_hold() const;
};

// Aut(gamma)-invariant edge set Y destroying every copy of the tadpole K,
// with |Y| <= (|E(K)|-1)*|X|. X must hit every copy; when omitted, the exact
// minimum hitting set is used.
PipelineTrace symmetric_tadpole_representatives(const Graph& k, const Graph& gamma,
                                                std::optional<EdgeSet> x = std::nullopt);

}  // namespace fairrep
