#pragma once

#include <cstdint>
#include <vector>

#include "fairrep/graph.hpp"
#include "fairrep/perm.hpp"

namespace fairrep {

struct FamilyOfSets {
  std::vector<std::vector<int>> sets;
};

struct HittingResult {
  std::int64_t value = 0;
  std::vector<int> witness;         // chosen elements, sorted
  std::vector<int> witness_orbits;  // chosen class ids (orbit variant only)
};

// Exact minimum hitting set. Among optima, the witness is the
// lexicographically smallest sorted id sequence. Throws Infeasible on an
// empty member.
HittingResult min_hitting_set(const FamilyOfSets& family);

// Exact minimum-cardinality hitting set among unions of orbit classes.
// Every element of the family must lie in the partition's ground set.
HittingResult min_orbit_hitting_set(const FamilyOfSets& family, const OrbitPartition& orbits);

// Edge representativeness of `pattern` in `host`; with `symmetric`, restricted
// to Aut(host)-invariant edge sets. Witness ids index host.edges().
HittingResult upsilon_edge(const Graph& pattern, const Graph& host, bool symmetric);

bool hits_all(const FamilyOfSets& family, const std::vector<int>& x);

}  // namespace fairrep
