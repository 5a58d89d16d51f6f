#pragma once

#include <string>

#include <json.hpp>

#include "fairrep/cover_opt.hpp"
#include "fairrep/dm_cover.hpp"
#include "fairrep/graph.hpp"
#include "fairrep/perm.hpp"
#include "fairrep/subiso.hpp"
#include "fairrep/symmetrize.hpp"
#include "fairrep/tadpole.hpp"

namespace fairrep {

using Json = nlohmann::json;

// {"n": int, "edges": [[u,v],...]} with sorted edges.
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const EdgeSet& x);
Json to_json(const Permutation& p);
Json to_json(const OrbitPartition& p);
Json to_json(const Copy& c);
Json to_json(const HittingResult& r);
Json to_json(const Cover& c);
Json to_json(const BoundCheck& c);
Json to_json(const SymmetrizationReport& r);
Json to_json(const PipelineTrace& t);
// Big integers fit into a JSON number when they are small enough, else a
// decimal string.
Json to_json(const BigInt& n);

// {"sets": [[ids...],...]}
FamilyOfSets family_from_json(const Json& j);
Json to_json(const FamilyOfSets& f);
// {"functions": [{"weights": [{"element": id, "w": "p/q"}, ...]}, ...]}
WeightedFamily weighted_family_from_json(const Json& j);
Json to_json(const WeightedFamily& f);
// {"degree": n, "generators": [[image...],...]}
PermGroup group_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace fairrep
